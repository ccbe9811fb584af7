// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace epoch::ctl {

// Simulated DRAM used as the snapshot dump target. Regions are carved out of
// a nominal address space per slot; addresses only matter for bookkeeping and
// overlap checks, contents are held per region.
struct DramRegion {
  std::uint64_t base = 0;
  std::uint32_t capacity_frames = 0;

  bool operator==(const DramRegion&) const = default;
};

class DramStore {
 public:
  static constexpr std::size_t kRegionHeaderBytes = 128;
  // 4-byte frame address plus 101 words per frame.
  static constexpr std::size_t kBytesPerFrame = 4 + 101 * 4;

  static std::size_t region_size_bytes(std::uint32_t capacity_frames) {
    return kRegionHeaderBytes + kBytesPerFrame * capacity_frames;
  }

  // Throws SlotOverlap when the slot already has a region or the address
  // range intersects an existing one.
  void add_region(const std::string& slot, std::uint64_t base,
                  std::uint32_t capacity_frames);

  bool has_region(const std::string& slot) const;
  // Throws UnknownSlot.
  const DramRegion& region(const std::string& slot) const;

  // Throws UnknownSlot; RegionOverflow when the blob exceeds the region.
  void write_blob(const std::string& slot,
                  std::span<const std::uint8_t> bytes);

  // The region's stored bytes (empty before the first write).
  std::span<const std::uint8_t> blob(const std::string& slot) const;

  const std::map<std::string, DramRegion>& regions() const { return regions_; }

 private:
  std::map<std::string, DramRegion> regions_;
  std::map<std::string, std::vector<std::uint8_t>> contents_;
};

}  // namespace epoch::ctl
