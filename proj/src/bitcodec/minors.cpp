// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/bitcodec/minors.hpp"

namespace epoch::bitcodec {

std::array<std::uint8_t, 4> lut_far_minors(SliceParity parity) {
  switch (parity) {
    case SliceParity::kOddSliceL:
      return {26, 27, 28, 29};
    case SliceParity::kEvenSliceM:
      return {32, 33, 34, 35};
  }
  return {};
}

std::array<std::uint8_t, 2> ff_far_minors() { return {30, 31}; }

}  // namespace epoch::bitcodec
