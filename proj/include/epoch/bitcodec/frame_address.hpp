// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "epoch/words.hpp"

namespace epoch::bitcodec {

// Frame address register field layout (32-bit word):
//   [31:26] reserved, must be zero
//   [25:23] block type
//   [22]    half: 0 = top, 1 = bottom
//   [21:17] row
//   [16:7]  column
//   [6:0]   minor
enum class BlockType : std::uint8_t {
  kClb = 0,     // CLB / interconnect configuration
  kBram = 1,    // block RAM content
  kCfgClb = 2,  // CLB configuration special frames
};

const char* to_string(BlockType t);

struct FrameAddress {
  BlockType block_type = BlockType::kClb;
  bool bottom_half = false;
  std::uint8_t row = 0;      // 5 bits
  std::uint16_t column = 0;  // 10 bits
  std::uint8_t minor = 0;    // 7 bits

  // Member order matches the packed field order, so the defaulted comparison
  // sorts identically to the numeric order of the encoded word.
  auto operator<=>(const FrameAddress&) const = default;
};

// Throws FieldOutOfRange when a field does not fit its bit width.
word32 far_encode(const FrameAddress& far);

// Throws ReservedBitsSet when bits [31:26] are nonzero and UnknownBlockType
// for block type values outside {0, 1, 2}.
FrameAddress far_decode(word32 w);

std::string to_string(const FrameAddress& far);
std::ostream& operator<<(std::ostream& os, const FrameAddress& far);

}  // namespace epoch::bitcodec
