// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "epoch/ctl/snapshot.hpp"
#include "helpers.hpp"

using namespace epoch;
using namespace epoch::ctl;

namespace {

Snapshot sample() {
  Snapshot s;
  s.slot_id = "slot2";
  s.idcode = 0x03727093;
  s.captured_at_cycle = 0x1122334455667788ULL;
  std::mt19937 rng(31);
  for (word32 far : {0x0042031Eu, 0x00C20180u, 0x00420280u}) {
    bitcodec::Frame f;
    for (auto& w : f.words()) w = rng();
    s.frames.emplace_back(bitcodec::far_decode(far), f);
  }
  s.fixup_applied = true;
  return s;
}

}  // namespace

TEST_CASE("snapshot bytes round-trip") {
  Snapshot s = sample();
  auto bytes = serialize_snapshot(s);
  Snapshot back = deserialize_snapshot(bytes);
  CHECK(back == s);
  CHECK(back.slot_id == "slot2");
  CHECK(back.idcode == 0x03727093);
  CHECK(back.captured_at_cycle == 0x1122334455667788ULL);
  REQUIRE(back.frames.size() == 3);
  CHECK(bitcodec::far_encode(back.frames[1].first) == 0x00C20180);

  // fixup_applied is producer bookkeeping, not wire state.
  CHECK_FALSE(back.fixup_applied);
  Snapshot t = s;
  t.fixup_applied = false;
  CHECK(t == s);
}

TEST_CASE("layout starts with magic, version and idcode") {
  auto bytes = serialize_snapshot(sample());
  REQUIRE(bytes.size() >= 16);
  CHECK(bytes[0] == 'E');
  CHECK(bytes[1] == 'P');
  CHECK(bytes[2] == 'O');
  CHECK(bytes[3] == 'C');
  CHECK(read_be32(bytes.data() + 4) == kSnapshotVersion);
  CHECK(read_be32(bytes.data() + 8) == 0x03727093);
  // magic + version + idcode + len + "slot2" + cycle + count + 3 * record
  CHECK(bytes.size() == 4 + 4 + 4 + 4 + 5 + 8 + 4 + 3 * (4 + 101 * 4));
}

TEST_CASE("empty snapshots serialize too") {
  Snapshot s;
  s.slot_id = "";
  auto bytes = serialize_snapshot(s);
  Snapshot back = deserialize_snapshot(bytes);
  CHECK(back == s);
  CHECK(back.frames.empty());
}

TEST_CASE("trailing bytes after the last record are ignored") {
  Snapshot s = sample();
  auto bytes = serialize_snapshot(s);
  bytes.resize(bytes.size() + 1000, 0xEE);
  CHECK(deserialize_snapshot(bytes) == s);
}

TEST_CASE("corrupt headers are rejected") {
  Snapshot s = sample();
  auto good = serialize_snapshot(s);

  auto bad_magic = good;
  bad_magic[0] = 'X';
  CHECK(test::code_of([&] { deserialize_snapshot(bad_magic); }) ==
        ErrorCode::kBadConfigFile);

  auto bad_version = good;
  bad_version[7] = 9;
  CHECK(test::code_of([&] { deserialize_snapshot(bad_version); }) ==
        ErrorCode::kBadConfigFile);

  // Truncations at every header boundary and inside the frame records.
  for (std::size_t cut : {0u, 3u, 9u, 15u, 20u, 30u, 33u}) {
    auto t = good;
    t.resize(std::min(t.size(), cut));
    CHECK(test::code_of([&] { deserialize_snapshot(t); }) ==
          ErrorCode::kBadConfigFile);
  }
  auto t = good;
  t.resize(t.size() - 7);  // inside the last frame
  CHECK(test::code_of([&] { deserialize_snapshot(t); }) ==
        ErrorCode::kBadConfigFile);
}

TEST_CASE("oversized slot names are rejected") {
  Snapshot s = sample();
  s.slot_id.assign(5000, 'x');
  auto bytes = serialize_snapshot(s);
  CHECK(test::code_of([&] { deserialize_snapshot(bytes); }) ==
        ErrorCode::kBadConfigFile);
}
