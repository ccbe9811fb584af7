// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/ctl/timing.hpp"

namespace epoch::ctl {

double estimate_timing_us(const TimingModel& model, std::uint64_t n_frames,
                          PortOp op) {
  if (n_frames == 0) return 0.0;
  double per_frame = op == PortOp::kSave ? model.save_us_per_frame
                                         : model.restore_us_per_frame;
  double scale = kReferencePortHz / model.port_clock_hz;
  return static_cast<double>(n_frames) * per_frame * scale +
         static_cast<double>(n_frames - 1) * model.interframe_gap_us;
}

}  // namespace epoch::ctl
