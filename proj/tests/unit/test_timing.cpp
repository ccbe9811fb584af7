// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "epoch/ctl/timing.hpp"

using namespace epoch::ctl;

TEST_CASE("reference per-frame costs") {
  TimingModel m;
  CHECK(m.port_clock_hz == kReferencePortHz);
  CHECK(estimate_timing_us(m, 1, PortOp::kSave) == doctest::Approx(62.2));
  CHECK(estimate_timing_us(m, 1, PortOp::kRestore) == doctest::Approx(67.4));
  CHECK(estimate_timing_us(m, 3, PortOp::kSave) == doctest::Approx(3 * 62.2));
  CHECK(estimate_timing_us(m, 0, PortOp::kSave) == 0.0);
  CHECK(estimate_timing_us(m, 0, PortOp::kRestore) == 0.0);
}

TEST_CASE("costs scale inversely with the port clock") {
  TimingModel m;
  m.port_clock_hz = 100.0e6;
  CHECK(estimate_timing_us(m, 1, PortOp::kSave) == doctest::Approx(31.1));
  CHECK(estimate_timing_us(m, 1, PortOp::kRestore) == doctest::Approx(33.7));
  m.port_clock_hz = 25.0e6;
  CHECK(estimate_timing_us(m, 2, PortOp::kSave) == doctest::Approx(4 * 62.2));
}

TEST_CASE("interframe gap applies between consecutive frames") {
  TimingModel m;
  m.interframe_gap_us = 0.5;
  CHECK(estimate_timing_us(m, 1, PortOp::kSave) == doctest::Approx(62.2));
  CHECK(estimate_timing_us(m, 4, PortOp::kSave) ==
        doctest::Approx(4 * 62.2 + 3 * 0.5));
  CHECK(estimate_timing_us(m, 0, PortOp::kSave) == 0.0);
}
