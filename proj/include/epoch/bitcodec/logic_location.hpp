// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "epoch/bitcodec/frame_address.hpp"

namespace epoch::bitcodec {

// One line of a logic-location (.ll) cell map:
//   Bit <seq> <far-hex> <word> <bit> Block=<site> Kind=<kind> Net=<path> Slot=<id>
// plus '#' comment lines and blank lines.
enum class ElementKind : std::uint8_t { kFf, kLutRam, kBram, kDsp };

const char* to_string(ElementKind k);

struct LogicLocationEntry {
  std::uint32_t seq = 0;
  FrameAddress far;
  std::uint8_t frame_word = 0;  // 0..100
  std::uint8_t frame_bit = 0;   // 0..31
  std::string block_site;
  ElementKind kind = ElementKind::kFf;
  std::string design_path;
  std::string slot_id;

  bool operator==(const LogicLocationEntry&) const = default;
};

// Throws MalformedLine with the 1-based line number on any parse failure.
std::vector<LogicLocationEntry> parse_logic_location(std::string_view text);

std::string format_logic_location(const std::vector<LogicLocationEntry>& entries);

// Trailing "[k]" index of a design path ("chain/digest[7]" -> 7); -1 when the
// path carries no index.
int design_path_index(std::string_view path);

}  // namespace epoch::bitcodec
