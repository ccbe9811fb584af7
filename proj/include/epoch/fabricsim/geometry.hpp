// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "epoch/bitcodec/frame_address.hpp"
#include "epoch/words.hpp"

namespace epoch::fabricsim {

enum class ColumnKind : std::uint8_t { kClb, kBram, kDsp };

const char* to_string(ColumnKind k);

struct ColumnSpec {
  ColumnKind kind = ColumnKind::kClb;
  std::uint8_t minors_per_column = 36;

  bool operator==(const ColumnSpec&) const = default;
};

// A synthetic device floorplan. Frame addresses are valid against a geometry,
// never against a real part:
//  - CLB-type addresses cover every column (interconnect plus logic config);
//  - BRAM-type addresses cover BRAM-kind columns only, reusing the column's
//    index and minor count for the content space;
//  - CFG_CLB-type addresses are never valid here.
struct DeviceGeometry {
  word32 idcode = 0;
  std::uint8_t rows_top = 1;
  std::uint8_t rows_bottom = 0;
  std::vector<ColumnSpec> columns;
  word32 slcr_unlock_key = 0x0000DF0D;
  // Port-pacing model: arming back-to-back readbacks with less than this gap
  // while the port clock is at or above freeze_port_hz logs FabricFreeze.
  double min_interframe_gap_us = 0.5;
  double freeze_port_hz = 100.0e6;

  bool operator==(const DeviceGeometry&) const = default;

  // Throws BadConfigFile when structurally unusable (no columns, no rows,
  // zero minors somewhere).
  void validate() const;

  bool contains(const bitcodec::FrameAddress& far) const;

  // Total number of valid frame addresses.
  std::size_t frame_count() const;

  // Next valid address in canonical order (minor, column, row, half, block
  // type); nullopt past the last frame. Throws FarOutOfRange when far itself
  // is not valid for this geometry.
  std::optional<bitcodec::FrameAddress> far_successor(
      const bitcodec::FrameAddress& far) const;
};

// Text format: '#' comments, 'key = value' lines, one 'column = KIND MINORS'
// line per column in fabric order. Throws BadConfigFile with line numbers.
DeviceGeometry parse_geometry(std::string_view text);

std::string format_geometry(const DeviceGeometry& geom);

}  // namespace epoch::fabricsim
