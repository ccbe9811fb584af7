// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epoch/ctl/dram_store.hpp"
#include "epoch/ctl/snapshot.hpp"
#include "epoch/ctl/timing.hpp"
#include "epoch/fabricsim/device_model.hpp"

namespace epoch::ctl {

struct ControllerOptions {
  bool bram_fixup = true;
  bool skip_gsr = false;
  bool blank_before_restore = false;
  bool glut_unmask = true;
  bool capture_ffs = true;
  TimingModel timing{};
};

// Clock control pair used around every port operation: SLCR unlock followed
// by a throttle write.
void clock_stop(fabricsim::DeviceModel& dev);
void clock_start(fabricsim::DeviceModel& dev);

// Save flow: stop the tenant clock, read back every frame of the slot
// (capture first), apply the BRAM fixup unless disabled, dump the serialised
// snapshot into the slot's DRAM region, restart the clock.
// Throws UnknownSlot (slot maps no cells or has no region), RegionOverflow.
Snapshot context_save(fabricsim::DeviceModel& dev, const std::string& slot,
                      DramStore& store, const ControllerOptions& options = {});

// Restore flow: verify idcode, reload the serialised snapshot from DRAM,
// stop the clock, optionally blank the slot's frames, write every frame via
// a synthesised partial write sequence, pulse GSR unless skipped, restart
// the clock. The snapshot argument is the handle naming slot and expected
// device; frame data comes from the store.
// Throws IdcodeMismatch (device untouched), UnknownSlot.
void context_restore(fabricsim::DeviceModel& dev, const Snapshot& snapshot,
                     const DramStore& store,
                     const ControllerOptions& options = {});

// Reads the slot's snapshot back out of its DRAM region.
Snapshot load_snapshot(const DramStore& store, const std::string& slot);

// Writes all-zero frames over every frame of the slot and pulses GSR:
// the slot returns to a blank state.
void blank_slot(fabricsim::DeviceModel& dev, const std::string& slot,
                const ControllerOptions& options = {});

// One differing word between two snapshots of the same slot layout.
struct FrameDiff {
  bitcodec::FrameAddress far;
  std::uint8_t word = 0;
  word32 before = 0;
  word32 after = 0;
};

// Throws GeometryMismatch when the snapshots cover different frame lists.
// Word 50 differences are reported only with include_crc_slot.
std::vector<FrameDiff> diff_snapshots(const Snapshot& a, const Snapshot& b,
                                      bool include_crc_slot = false);

}  // namespace epoch::ctl
