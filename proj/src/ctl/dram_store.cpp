// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/ctl/dram_store.hpp"

#include "epoch/error.hpp"
#include "epoch/words.hpp"

namespace epoch::ctl {

void DramStore::add_region(const std::string& slot, std::uint64_t base,
                           std::uint32_t capacity_frames) {
  if (regions_.count(slot) != 0) {
    raise(ErrorCode::kSlotOverlap, "slot " + slot + " already has a region");
  }
  std::uint64_t size = region_size_bytes(capacity_frames);
  for (const auto& [other, r] : regions_) {
    std::uint64_t other_size = region_size_bytes(r.capacity_frames);
    bool disjoint = base + size <= r.base || r.base + other_size <= base;
    if (!disjoint) {
      raise(ErrorCode::kSlotOverlap,
            "region for " + slot + " overlaps region for " + other);
    }
  }
  regions_[slot] = DramRegion{base, capacity_frames};
  contents_[slot] = {};
}

bool DramStore::has_region(const std::string& slot) const {
  return regions_.count(slot) != 0;
}

const DramRegion& DramStore::region(const std::string& slot) const {
  auto it = regions_.find(slot);
  if (it == regions_.end()) {
    raise(ErrorCode::kUnknownSlot, "no DRAM region for slot " + slot);
  }
  return it->second;
}

void DramStore::write_blob(const std::string& slot,
                           std::span<const std::uint8_t> bytes) {
  const DramRegion& r = region(slot);
  if (bytes.size() > region_size_bytes(r.capacity_frames)) {
    raise(ErrorCode::kRegionOverflow,
          "blob of " + std::to_string(bytes.size()) + " bytes exceeds the " +
              std::to_string(region_size_bytes(r.capacity_frames)) +
              " byte region of slot " + slot);
  }
  contents_[slot].assign(bytes.begin(), bytes.end());
}

std::span<const std::uint8_t> DramStore::blob(const std::string& slot) const {
  region(slot);  // existence check
  return contents_.at(slot);
}

}  // namespace epoch::ctl
