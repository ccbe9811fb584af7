// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include "doctest.h"
#include "epoch/bitcodec/frame_address.hpp"
#include "helpers.hpp"

using namespace epoch;
using namespace epoch::bitcodec;

TEST_CASE("reference frame addresses encode to their published words") {
  FrameAddress clb{BlockType::kClb, true, 1, 2, 30};
  CHECK(far_encode(clb) == 0x0042011E);

  CHECK(far_encode(FrameAddress{}) == 0x00000000);

  FrameAddress bram{BlockType::kBram, false, 0, 4, 0};
  CHECK(far_encode(bram) == 0x00800200);
}

TEST_CASE("decode splits the documented bitfields") {
  FrameAddress far = far_decode(0x0042011E);
  CHECK(far.block_type == BlockType::kClb);
  CHECK(far.bottom_half);
  CHECK(far.row == 1);
  CHECK(far.column == 2);
  CHECK(far.minor == 30);

  // Same frame row/column, first LUT minor of the even slice.
  CHECK(far_decode(0x00420120).minor == 32);

  FrameAddress zero = far_decode(0x00000000);
  CHECK(zero == FrameAddress{});
}

TEST_CASE("reserved bits and unknown block types are rejected") {
  CHECK(test::code_of([] { far_decode(0xFC000000); }) ==
        ErrorCode::kReservedBitsSet);
  CHECK(test::code_of([] { far_decode(0x04000000); }) ==
        ErrorCode::kReservedBitsSet);
  // Block type 3 and 7 have no meaning.
  CHECK(test::code_of([] { far_decode(0x01800000); }) ==
        ErrorCode::kUnknownBlockType);
  CHECK(test::code_of([] { far_decode(0x03800000); }) ==
        ErrorCode::kUnknownBlockType);
}

TEST_CASE("encode rejects fields wider than their slots") {
  CHECK(test::code_of([] {
          far_encode({BlockType::kClb, false, 32, 0, 0});
        }) == ErrorCode::kFieldOutOfRange);
  CHECK(test::code_of([] {
          far_encode({BlockType::kClb, false, 0, 1024, 0});
        }) == ErrorCode::kFieldOutOfRange);
  CHECK(test::code_of([] {
          far_encode({BlockType::kClb, false, 0, 0, 128});
        }) == ErrorCode::kFieldOutOfRange);
}

TEST_CASE("randomized round-trip and ordering consistency") {
  std::mt19937 rng(0xFA12);
  std::uniform_int_distribution<int> block(0, 2);
  std::uniform_int_distribution<int> boolean(0, 1);
  std::uniform_int_distribution<int> row(0, 31);
  std::uniform_int_distribution<int> column(0, 1023);
  std::uniform_int_distribution<int> minor(0, 127);

  FrameAddress prev{};
  word32 prev_word = far_encode(prev);
  for (int i = 0; i < 100000; ++i) {
    FrameAddress far{static_cast<BlockType>(block(rng)), boolean(rng) == 1,
                     static_cast<std::uint8_t>(row(rng)),
                     static_cast<std::uint16_t>(column(rng)),
                     static_cast<std::uint8_t>(minor(rng))};
    word32 w = far_encode(far);
    CHECK(far_decode(w) == far);
    // Struct comparison order must match numeric encoding order.
    CHECK((far < prev) == (w < prev_word));
    prev = far;
    prev_word = w;
  }
}

TEST_CASE("to_string names every field") {
  std::string s = to_string(far_decode(0x0042011E));
  CHECK(s.find("CLB") != std::string::npos);
  CHECK(s.find("30") != std::string::npos);
}
