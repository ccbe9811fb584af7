// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/words.hpp"

#include <cstdio>

#include "epoch/error.hpp"

namespace epoch {

word32 read_be32(const std::uint8_t* p) {
  return (static_cast<word32>(p[0]) << 24) | (static_cast<word32>(p[1]) << 16) |
         (static_cast<word32>(p[2]) << 8) | static_cast<word32>(p[3]);
}

void append_be32(std::vector<std::uint8_t>& out, word32 w) {
  out.push_back(static_cast<std::uint8_t>(w >> 24));
  out.push_back(static_cast<std::uint8_t>(w >> 16));
  out.push_back(static_cast<std::uint8_t>(w >> 8));
  out.push_back(static_cast<std::uint8_t>(w));
}

std::vector<std::uint8_t> words_to_bytes(std::span<const word32> words) {
  std::vector<std::uint8_t> out;
  out.reserve(words.size() * 4);
  for (word32 w : words) append_be32(out, w);
  return out;
}

std::vector<word32> bytes_to_words(std::span<const std::uint8_t> bytes) {
  if (bytes.size() % 4 != 0) {
    raise(ErrorCode::kLengthNotWordMultiple,
          "byte length " + std::to_string(bytes.size()) +
              " is not a multiple of 4");
  }
  std::vector<word32> out;
  out.reserve(bytes.size() / 4);
  for (std::size_t i = 0; i < bytes.size(); i += 4) {
    out.push_back(read_be32(bytes.data() + i));
  }
  return out;
}

std::string format_word(word32 w) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "0x%08X", w);
  return buf;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFieldOutOfRange: return "FieldOutOfRange";
    case ErrorCode::kReservedBitsSet: return "ReservedBitsSet";
    case ErrorCode::kUnknownBlockType: return "UnknownBlockType";
    case ErrorCode::kBadFrameLength: return "BadFrameLength";
    case ErrorCode::kTruncatedPayload: return "TruncatedPayload";
    case ErrorCode::kOrphanType2: return "OrphanType2";
    case ErrorCode::kPayloadCountMismatch: return "PayloadCountMismatch";
    case ErrorCode::kUnknownPacketWord: return "UnknownPacketWord";
    case ErrorCode::kCountOverflow: return "CountOverflow";
    case ErrorCode::kSyncNotFound: return "SyncNotFound";
    case ErrorCode::kLengthNotWordMultiple: return "LengthNotWordMultiple";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kBadConfigFile: return "BadConfigFile";
    case ErrorCode::kCellOutsideGeometry: return "CellOutsideGeometry";
    case ErrorCode::kDuplicateCell: return "DuplicateCell";
    case ErrorCode::kIdcodeMismatch: return "IdcodeMismatch";
    case ErrorCode::kNotSynced: return "NotSynced";
    case ErrorCode::kCrcMismatch: return "CrcMismatch";
    case ErrorCode::kMissingPaddingFrame: return "MissingPaddingFrame";
    case ErrorCode::kWriteWhileNotWcfg: return "WriteWhileNotWcfg";
    case ErrorCode::kReadbackNotArmed: return "ReadbackNotArmed";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kFarOutOfRange: return "FarOutOfRange";
    case ErrorCode::kSlotOverlap: return "SlotOverlap";
    case ErrorCode::kUnknownSlot: return "UnknownSlot";
    case ErrorCode::kRegionOverflow: return "RegionOverflow";
    case ErrorCode::kGeometryMismatch: return "GeometryMismatch";
    case ErrorCode::kNotABramFrame: return "NotABramFrame";
    case ErrorCode::kGoldenMismatch: return "GoldenMismatch";
    case ErrorCode::kScriptParse: return "ScriptParse";
  }
  return "UnknownError";
}

}  // namespace epoch
