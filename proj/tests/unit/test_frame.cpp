// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "epoch/bitcodec/frame.hpp"
#include "helpers.hpp"

using namespace epoch;
using namespace epoch::bitcodec;

TEST_CASE("frames hold exactly 101 words with word 50 as the CRC slot") {
  CHECK(Frame::kWordsPerFrame == 101);
  CHECK(Frame::kCrcWordIndex == 50);

  std::vector<word32> too_short(100, 0);
  CHECK(test::code_of([&] { Frame f{std::span<const word32>(too_short)}; }) ==
        ErrorCode::kBadFrameLength);
  std::vector<word32> too_long(102, 0);
  CHECK(test::code_of([&] { Frame f{std::span<const word32>(too_long)}; }) ==
        ErrorCode::kBadFrameLength);

  std::vector<word32> exact(101, 0xABCD0123);
  Frame f{std::span<const word32>(exact)};
  CHECK(f[0] == 0xABCD0123);
  CHECK(f[100] == 0xABCD0123);
}

TEST_CASE("bit accessors address single configuration bits") {
  Frame f;
  CHECK_FALSE(f.bit(12, 5));
  f.set_bit(12, 5, true);
  CHECK(f.bit(12, 5));
  CHECK(f[12] == (1u << 5));
  f.set_bit(12, 5, false);
  CHECK(f == Frame{});
}

TEST_CASE("content equality ignores the CRC slot only") {
  Frame a = Frame::filled(0x11111111);
  Frame b = a;
  b[Frame::kCrcWordIndex] = 0x22222222;
  CHECK(a != b);
  CHECK(a.equal_ignoring_crc_slot(b));

  b[7] ^= 1;
  CHECK_FALSE(a.equal_ignoring_crc_slot(b));
}

TEST_CASE("filled writes every word") {
  Frame f = Frame::filled(0xDEADBEEF);
  for (std::size_t i = 0; i < Frame::kWordsPerFrame; ++i) {
    CHECK(f[i] == 0xDEADBEEF);
  }
}
