// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace epoch::ctl {

// Latency model for the configuration port. The per-frame figures are
// measured single-frame costs at the 50 MHz reference port clock; estimates
// scale inversely with the actual port clock.
struct TimingModel {
  double port_clock_hz = 50.0e6;
  double save_us_per_frame = 62.2;
  double restore_us_per_frame = 67.4;
  double interframe_gap_us = 0.0;

  bool operator==(const TimingModel&) const = default;
};

enum class PortOp : std::uint8_t { kSave, kRestore };

inline constexpr double kReferencePortHz = 50.0e6;

// n_frames * per-frame cost (clock-scaled) plus the configured gap between
// consecutive frames.
double estimate_timing_us(const TimingModel& model, std::uint64_t n_frames,
                          PortOp op);

}  // namespace epoch::ctl
