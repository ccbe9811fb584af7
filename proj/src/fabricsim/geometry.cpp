// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/fabricsim/geometry.hpp"

#include <charconv>
#include <sstream>

#include "epoch/error.hpp"

namespace epoch::fabricsim {

using bitcodec::BlockType;
using bitcodec::FrameAddress;

namespace {

// Block types in canonical (numeric) order, CFG_CLB excluded because no
// address of that type is valid against a geometry.
constexpr BlockType kBlockOrder[] = {BlockType::kClb, BlockType::kBram};

bool column_valid_for(const DeviceGeometry& g, BlockType block,
                      std::size_t col) {
  if (col >= g.columns.size()) return false;
  if (block == BlockType::kBram) {
    return g.columns[col].kind == ColumnKind::kBram;
  }
  return true;
}

std::optional<std::size_t> next_column_for(const DeviceGeometry& g,
                                           BlockType block, std::size_t from) {
  for (std::size_t c = from; c < g.columns.size(); ++c) {
    if (column_valid_for(g, block, c)) return c;
  }
  return std::nullopt;
}

// First valid address of a block type, if the type has any frames at all.
std::optional<FrameAddress> first_of_block(const DeviceGeometry& g,
                                           BlockType block) {
  auto col = next_column_for(g, block, 0);
  if (!col) return std::nullopt;
  FrameAddress far;
  far.block_type = block;
  far.bottom_half = g.rows_top == 0;
  far.row = 0;
  far.column = static_cast<std::uint16_t>(*col);
  far.minor = 0;
  return far;
}

}  // namespace

const char* to_string(ColumnKind k) {
  switch (k) {
    case ColumnKind::kClb: return "CLB";
    case ColumnKind::kBram: return "BRAM";
    case ColumnKind::kDsp: return "DSP";
  }
  return "?";
}

void DeviceGeometry::validate() const {
  if (columns.empty()) {
    raise(ErrorCode::kBadConfigFile, "geometry has no columns");
  }
  if (rows_top == 0 && rows_bottom == 0) {
    raise(ErrorCode::kBadConfigFile, "geometry has no rows");
  }
  if (rows_top > 0x1F || rows_bottom > 0x1F) {
    raise(ErrorCode::kBadConfigFile, "row count exceeds the 5-bit row field");
  }
  if (columns.size() > 0x400) {
    raise(ErrorCode::kBadConfigFile,
          "column count exceeds the 10-bit column field");
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].minors_per_column == 0) {
      raise(ErrorCode::kBadConfigFile,
            "column " + std::to_string(c) + " has zero minors");
    }
    if (columns[c].minors_per_column > 0x80) {
      raise(ErrorCode::kBadConfigFile,
            "column " + std::to_string(c) +
                " minor count exceeds the 7-bit minor field");
    }
  }
}

bool DeviceGeometry::contains(const FrameAddress& far) const {
  if (far.block_type == BlockType::kCfgClb) return false;
  if (!column_valid_for(*this, far.block_type, far.column)) return false;
  std::uint8_t rows = far.bottom_half ? rows_bottom : rows_top;
  if (far.row >= rows) return false;
  return far.minor < columns[far.column].minors_per_column;
}

std::size_t DeviceGeometry::frame_count() const {
  std::size_t rows = static_cast<std::size_t>(rows_top) + rows_bottom;
  std::size_t total = 0;
  for (const auto& col : columns) {
    std::size_t minors = col.minors_per_column;
    total += rows * minors;                                 // CLB space
    if (col.kind == ColumnKind::kBram) total += rows * minors;  // BRAM space
  }
  return total;
}

std::optional<FrameAddress> DeviceGeometry::far_successor(
    const FrameAddress& far) const {
  if (!contains(far)) {
    raise(ErrorCode::kFarOutOfRange,
          to_string(far) + " is not a frame of this geometry");
  }
  FrameAddress next = far;
  // Minor within column.
  if (next.minor + 1 < columns[next.column].minors_per_column) {
    ++next.minor;
    return next;
  }
  next.minor = 0;
  // Next column valid for the block type.
  if (auto col = next_column_for(*this, next.block_type, next.column + 1)) {
    next.column = static_cast<std::uint16_t>(*col);
    return next;
  }
  next.column = static_cast<std::uint16_t>(
      *next_column_for(*this, next.block_type, 0));
  // Next row within the half.
  std::uint8_t rows = next.bottom_half ? rows_bottom : rows_top;
  if (next.row + 1 < rows) {
    ++next.row;
    return next;
  }
  next.row = 0;
  // Top half precedes bottom half.
  if (!next.bottom_half && rows_bottom > 0) {
    next.bottom_half = true;
    return next;
  }
  // Next block type that has frames.
  bool seen_current = false;
  for (BlockType b : kBlockOrder) {
    if (b == far.block_type) {
      seen_current = true;
      continue;
    }
    if (!seen_current) continue;
    if (auto first = first_of_block(*this, b)) return first;
  }
  return std::nullopt;
}

DeviceGeometry parse_geometry(std::string_view text) {
  DeviceGeometry geom;
  geom.columns.clear();
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool saw_idcode = false;

  auto fail = [&](const std::string& why) -> void {
    raise(ErrorCode::kBadConfigFile,
          "line " + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls{line};
    std::string key;
    if (!(ls >> key)) continue;
    std::string eq;
    if (!(ls >> eq) || eq != "=") fail("expected '" + key + " = <value>'");

    auto read_u32 = [&]() -> std::uint32_t {
      std::string tok;
      if (!(ls >> tok)) fail("missing value for " + key);
      std::uint32_t value = 0;
      const char* first = tok.data();
      const char* last = tok.data() + tok.size();
      int base = 10;
      if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) {
        first += 2;
        base = 16;
      }
      auto [ptr, ec] = std::from_chars(first, last, value, base);
      if (ec != std::errc() || ptr != last) fail("bad value '" + tok + "'");
      return value;
    };
    auto read_double = [&]() -> double {
      double value = 0;
      if (!(ls >> value)) fail("missing numeric value for " + key);
      return value;
    };

    if (key == "idcode") {
      geom.idcode = read_u32();
      saw_idcode = true;
    } else if (key == "rows_top") {
      geom.rows_top = static_cast<std::uint8_t>(read_u32());
    } else if (key == "rows_bottom") {
      geom.rows_bottom = static_cast<std::uint8_t>(read_u32());
    } else if (key == "slcr_unlock_key") {
      geom.slcr_unlock_key = read_u32();
    } else if (key == "min_interframe_gap_us") {
      geom.min_interframe_gap_us = read_double();
    } else if (key == "freeze_port_hz") {
      geom.freeze_port_hz = read_double();
    } else if (key == "column") {
      std::string kind;
      if (!(ls >> kind)) fail("column needs '<KIND> <minors>'");
      ColumnSpec col;
      if (kind == "CLB") {
        col.kind = ColumnKind::kClb;
      } else if (kind == "BRAM") {
        col.kind = ColumnKind::kBram;
      } else if (kind == "DSP") {
        col.kind = ColumnKind::kDsp;
      } else {
        fail("unknown column kind '" + kind + "'");
      }
      std::uint32_t minors = 0;
      if (!(ls >> minors)) fail("column needs a minor count");
      col.minors_per_column = static_cast<std::uint8_t>(minors);
      geom.columns.push_back(col);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!saw_idcode) {
    raise(ErrorCode::kBadConfigFile, "geometry file sets no idcode");
  }
  geom.validate();
  return geom;
}

std::string format_geometry(const DeviceGeometry& geom) {
  std::ostringstream os;
  os << "idcode = " << format_word(geom.idcode) << "\n"
     << "rows_top = " << static_cast<int>(geom.rows_top) << "\n"
     << "rows_bottom = " << static_cast<int>(geom.rows_bottom) << "\n"
     << "slcr_unlock_key = " << format_word(geom.slcr_unlock_key) << "\n"
     << "min_interframe_gap_us = " << geom.min_interframe_gap_us << "\n"
     << "freeze_port_hz = " << geom.freeze_port_hz << "\n";
  for (const auto& col : geom.columns) {
    os << "column = " << to_string(col.kind) << " "
       << static_cast<int>(col.minors_per_column) << "\n";
  }
  return os.str();
}

}  // namespace epoch::fabricsim
