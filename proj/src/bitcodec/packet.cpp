// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/bitcodec/packet.hpp"

#include <optional>

#include "epoch/error.hpp"

namespace epoch::bitcodec {

namespace {

constexpr word32 kTypeShift = 29;
constexpr word32 kOpcodeShift = 27;
constexpr word32 kRegisterShift = 13;
constexpr word32 kType1CountMask = 0x7FF;
constexpr word32 kType2CountMask = 0x07FFFFFF;
constexpr word32 kType1 = 1;
constexpr word32 kType2 = 2;

std::optional<PacketKind> special_word(word32 w) {
  switch (w) {
    case kDummyWord: return PacketKind::kDummy;
    case kSyncWord: return PacketKind::kSyncWord;
    case kBusWidthSyncWord: return PacketKind::kBusWidthSync;
    case kBusWidthDetectWord: return PacketKind::kBusWidthDetect;
    case kNoopWord: return PacketKind::kNoop;
    default: return std::nullopt;
  }
}

}  // namespace

bool is_known_register(std::uint8_t reg) {
  switch (reg) {
    case kRegCrc:
    case kRegFar:
    case kRegFdri:
    case kRegFdro:
    case kRegCmd:
    case kRegCtl0:
    case kRegMask:
    case kRegIdcode:
      return true;
    default:
      return false;
  }
}

std::string register_name(std::uint8_t reg) {
  switch (reg) {
    case kRegCrc: return "CRC";
    case kRegFar: return "FAR";
    case kRegFdri: return "FDRI";
    case kRegFdro: return "FDRO";
    case kRegCmd: return "CMD";
    case kRegCtl0: return "CTL0";
    case kRegMask: return "MASK";
    case kRegIdcode: return "IDCODE";
    default: return "REG" + std::to_string(reg);
  }
}

word32 type1_word(Opcode op, std::uint8_t reg, word32 count) {
  if (reg > 0x1F) {
    raise(ErrorCode::kFieldOutOfRange,
          "register address " + std::to_string(reg) + " exceeds 5 bits");
  }
  if (count > kType1CountMask) {
    raise(ErrorCode::kCountOverflow,
          "Type1 count " + std::to_string(count) + " exceeds 11 bits");
  }
  return (kType1 << kTypeShift) | (static_cast<word32>(op) << kOpcodeShift) |
         (static_cast<word32>(reg) << kRegisterShift) | count;
}

word32 type2_word(Opcode op, word32 count) {
  if (count > kType2CountMask) {
    raise(ErrorCode::kCountOverflow,
          "Type2 count " + std::to_string(count) + " exceeds 27 bits");
  }
  return (kType2 << kTypeShift) | (static_cast<word32>(op) << kOpcodeShift) |
         count;
}

std::vector<ConfigPacket> packet_decode(std::span<const word32> words) {
  std::vector<ConfigPacket> out;
  std::optional<std::uint8_t> last_type1_reg;
  std::size_t i = 0;
  while (i < words.size()) {
    word32 w = words[i];
    if (auto special = special_word(w)) {
      ConfigPacket p;
      p.kind = *special;
      out.push_back(std::move(p));
      ++i;
      continue;
    }
    word32 type = w >> kTypeShift;
    word32 op_bits = (w >> kOpcodeShift) & 0x3;
    if (op_bits == 3) {
      raise(ErrorCode::kUnknownPacketWord,
            "opcode 11 in header " + format_word(w));
    }
    Opcode op = static_cast<Opcode>(op_bits);
    if (type == kType1) {
      ConfigPacket p;
      p.kind = PacketKind::kType1;
      p.opcode = op;
      p.register_addr = static_cast<std::uint8_t>((w >> kRegisterShift) & 0x1F);
      p.word_count = w & kType1CountMask;
      last_type1_reg = p.register_addr;
      ++i;
      if (op == Opcode::kWrite && p.word_count > 0) {
        if (i + p.word_count > words.size()) {
          raise(ErrorCode::kTruncatedPayload,
                "Type1 write wants " + std::to_string(p.word_count) +
                    " payload words, stream has " +
                    std::to_string(words.size() - i));
        }
        p.payload.assign(words.begin() + static_cast<std::ptrdiff_t>(i),
                         words.begin() + static_cast<std::ptrdiff_t>(i + p.word_count));
        i += p.word_count;
      }
      out.push_back(std::move(p));
    } else if (type == kType2) {
      if (!last_type1_reg) {
        raise(ErrorCode::kOrphanType2,
              "Type2 header " + format_word(w) + " without preceding Type1");
      }
      ConfigPacket p;
      p.kind = PacketKind::kType2;
      p.opcode = op;
      p.register_addr = *last_type1_reg;
      p.word_count = w & kType2CountMask;
      ++i;
      if (op == Opcode::kWrite && p.word_count > 0) {
        if (i + p.word_count > words.size()) {
          raise(ErrorCode::kTruncatedPayload,
                "Type2 write wants " + std::to_string(p.word_count) +
                    " payload words, stream has " +
                    std::to_string(words.size() - i));
        }
        p.payload.assign(words.begin() + static_cast<std::ptrdiff_t>(i),
                         words.begin() + static_cast<std::ptrdiff_t>(i + p.word_count));
        i += p.word_count;
      }
      out.push_back(std::move(p));
    } else {
      raise(ErrorCode::kUnknownPacketWord,
            "unsupported packet type in " + format_word(w));
    }
  }
  return out;
}

std::vector<word32> packet_encode(std::span<const ConfigPacket> packets) {
  std::vector<word32> out;
  for (const ConfigPacket& p : packets) {
    switch (p.kind) {
      case PacketKind::kDummy: out.push_back(kDummyWord); break;
      case PacketKind::kSyncWord: out.push_back(kSyncWord); break;
      case PacketKind::kBusWidthSync: out.push_back(kBusWidthSyncWord); break;
      case PacketKind::kBusWidthDetect:
        out.push_back(kBusWidthDetectWord);
        break;
      case PacketKind::kNoop: out.push_back(kNoopWord); break;
      case PacketKind::kType1:
        if (p.opcode == Opcode::kWrite && p.payload.size() != p.word_count) {
          raise(ErrorCode::kPayloadCountMismatch,
                "Type1 write count " + std::to_string(p.word_count) +
                    " with payload of " + std::to_string(p.payload.size()));
        }
        out.push_back(type1_word(p.opcode, p.register_addr, p.word_count));
        if (p.opcode == Opcode::kWrite) {
          out.insert(out.end(), p.payload.begin(), p.payload.end());
        }
        break;
      case PacketKind::kType2:
        if (p.opcode == Opcode::kWrite && p.payload.size() != p.word_count) {
          raise(ErrorCode::kPayloadCountMismatch,
                "Type2 write count " + std::to_string(p.word_count) +
                    " with payload of " + std::to_string(p.payload.size()));
        }
        out.push_back(type2_word(p.opcode, p.word_count));
        if (p.opcode == Opcode::kWrite) {
          out.insert(out.end(), p.payload.begin(), p.payload.end());
        }
        break;
    }
  }
  return out;
}

}  // namespace epoch::bitcodec
