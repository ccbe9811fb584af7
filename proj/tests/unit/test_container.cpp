// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "epoch/bitcodec/container.hpp"
#include "helpers.hpp"

using namespace epoch;
using namespace epoch::bitcodec;

TEST_CASE("raw containers group bytes into big-endian words") {
  std::vector<std::uint8_t> bytes{0xFF, 0xFF, 0xFF, 0xFF,
                                  0xAA, 0x99, 0x55, 0x66};
  auto words = parse_container(bytes, ContainerKind::kBinFile);
  CHECK(words == std::vector<word32>{0xFFFFFFFF, 0xAA995566});
  // Length preserving: 4 bytes per word, nothing skipped.
  CHECK(4 * words.size() == bytes.size());
}

TEST_CASE("bit containers skip an arbitrary metadata header") {
  // 13 header bytes (odd on purpose: the preamble scan is byte-wise), then
  // the bus-width preamble and a sync word.
  std::vector<std::uint8_t> bytes(13, 0x5A);
  for (std::uint8_t b : {0x00, 0x00, 0x00, 0xBB}) bytes.push_back(b);
  for (std::uint8_t b : {0x11, 0x22, 0x00, 0x44}) bytes.push_back(b);
  for (std::uint8_t b : {0xAA, 0x99, 0x55, 0x66}) bytes.push_back(b);
  auto words = parse_container(bytes, ContainerKind::kBitFile);
  REQUIRE(words.size() == 3);
  CHECK(words[0] == kBusWidthSyncWord);
  CHECK(words[1] == kBusWidthDetectWord);
  CHECK(words[2] == kSyncWord);
}

TEST_CASE("bit containers without a preamble are rejected") {
  std::vector<std::uint8_t> bytes(64, 0x12);
  CHECK(test::code_of([&] { parse_container(bytes, ContainerKind::kBitFile); }) ==
        ErrorCode::kSyncNotFound);
}

TEST_CASE("stream length must be a word multiple") {
  std::vector<std::uint8_t> bytes(7, 0);
  CHECK(test::code_of([&] { parse_container(bytes, ContainerKind::kBinFile); }) ==
        ErrorCode::kLengthNotWordMultiple);
}
