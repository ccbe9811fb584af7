// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace epoch::bitcodec {

// Minor addresses that hold LUT truth tables and FF initial values inside a
// CLB column. LUT minors depend on slice parity; FF minors do not.
enum class SliceParity : std::uint8_t { kOddSliceL, kEvenSliceM };

std::array<std::uint8_t, 4> lut_far_minors(SliceParity parity);
std::array<std::uint8_t, 2> ff_far_minors();

}  // namespace epoch::bitcodec
