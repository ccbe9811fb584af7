// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/bitcodec/frame_address.hpp"

#include <ostream>
#include <sstream>

#include "epoch/error.hpp"

namespace epoch::bitcodec {

namespace {

constexpr word32 kReservedMask = 0xFC000000;
constexpr int kBlockShift = 23;
constexpr int kHalfShift = 22;
constexpr int kRowShift = 17;
constexpr int kColumnShift = 7;

}  // namespace

const char* to_string(BlockType t) {
  switch (t) {
    case BlockType::kClb: return "CLB";
    case BlockType::kBram: return "BRAM";
    case BlockType::kCfgClb: return "CFG_CLB";
  }
  return "?";
}

word32 far_encode(const FrameAddress& far) {
  if (far.row > 0x1F) {
    raise(ErrorCode::kFieldOutOfRange,
          "row " + std::to_string(far.row) + " exceeds 5 bits");
  }
  if (far.column > 0x3FF) {
    raise(ErrorCode::kFieldOutOfRange,
          "column " + std::to_string(far.column) + " exceeds 10 bits");
  }
  if (far.minor > 0x7F) {
    raise(ErrorCode::kFieldOutOfRange,
          "minor " + std::to_string(far.minor) + " exceeds 7 bits");
  }
  word32 w = 0;
  w |= static_cast<word32>(far.block_type) << kBlockShift;
  w |= static_cast<word32>(far.bottom_half ? 1 : 0) << kHalfShift;
  w |= static_cast<word32>(far.row) << kRowShift;
  w |= static_cast<word32>(far.column) << kColumnShift;
  w |= static_cast<word32>(far.minor);
  return w;
}

FrameAddress far_decode(word32 w) {
  if ((w & kReservedMask) != 0) {
    raise(ErrorCode::kReservedBitsSet,
          "reserved bits [31:26] set in " + format_word(w));
  }
  word32 block = (w >> kBlockShift) & 0x7;
  if (block > 2) {
    raise(ErrorCode::kUnknownBlockType,
          "block type " + std::to_string(block) + " in " + format_word(w));
  }
  FrameAddress far;
  far.block_type = static_cast<BlockType>(block);
  far.bottom_half = ((w >> kHalfShift) & 1) != 0;
  far.row = static_cast<std::uint8_t>((w >> kRowShift) & 0x1F);
  far.column = static_cast<std::uint16_t>((w >> kColumnShift) & 0x3FF);
  far.minor = static_cast<std::uint8_t>(w & 0x7F);
  return far;
}

std::string to_string(const FrameAddress& far) {
  std::ostringstream os;
  os << to_string(far.block_type) << " " << (far.bottom_half ? "bottom" : "top")
     << " row=" << static_cast<int>(far.row) << " col=" << far.column
     << " minor=" << static_cast<int>(far.minor);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FrameAddress& far) {
  return os << to_string(far);
}

}  // namespace epoch::bitcodec
