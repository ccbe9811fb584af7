// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include "doctest.h"
#include "epoch/bitcodec/logic_location.hpp"
#include "epoch/fabricsim/geometry.hpp"
#include "epoch/tenants/tenant.hpp"
#include "helpers.hpp"

using namespace epoch;
using namespace epoch::tenants;

namespace {

fabricsim::DeviceModel demo() {
  return fabricsim::DeviceModel(
      fabricsim::parse_geometry(test::read_fixture("demo_geometry.txt")),
      bitcodec::parse_logic_location(test::read_fixture("demo_cells.ll")));
}

// Reference mix recomputed from scratch, kept independent of the library.
word32 mix_reference(word32 d) {
  word32 rot = (d << 5) | (d >> 27);
  return rot + (d ^ 0x9E3779B9u);
}

}  // namespace

TEST_CASE("tenant kind names round-trip") {
  for (TenantKind k :
       {TenantKind::kUpCounter4, TenantKind::kDownCounter4, TenantKind::kLfsr8,
        TenantKind::kLfsr32, TenantKind::kBramChain}) {
    CHECK(parse_tenant_kind(to_string(k)) == k);
  }
  CHECK(test::code_of([] { parse_tenant_kind("counter"); }) ==
        ErrorCode::kBadConfigFile);
}

TEST_CASE("default taps") {
  CHECK(default_taps(TenantKind::kLfsr8) ==
        std::vector<std::uint8_t>{8, 6, 5, 4});
  CHECK(default_taps(TenantKind::kLfsr32) ==
        std::vector<std::uint8_t>{32, 22, 2, 1});
}

TEST_CASE("lfsr8 trace from seed 0x01") {
  auto taps = default_taps(TenantKind::kLfsr8);
  word32 s = 0x01;
  for (int i = 0; i < 8; ++i) s = lfsr_step(s, taps, 8);
  CHECK(s == 0x1C);

  // Maximal-length polynomial: the full nonzero orbit.
  s = 0x01;
  int period = 0;
  do {
    s = lfsr_step(s, taps, 8);
    ++period;
    REQUIRE(s != 0);
  } while (s != 0x01);
  CHECK(period == 255);
}

TEST_CASE("lfsr32 trace from seed 0xDEADBEEF") {
  auto taps = default_taps(TenantKind::kLfsr32);
  word32 s = 0xDEADBEEF;
  for (int i = 0; i < 16; ++i) s = lfsr_step(s, taps, 32);
  CHECK(s == 0xBEEF3B1E);
}

TEST_CASE("chain mix matches an independent recomputation") {
  std::mt19937 rng(21);
  for (int i = 0; i < 1000; ++i) {
    word32 d = rng();
    CHECK(chain_mix(d) == mix_reference(d));
  }
  CHECK(kChainMacConstant == 0x01000193);
}

TEST_CASE("initial state per kind") {
  TenantParams p;
  CHECK(initial_state(TenantKind::kUpCounter4, p).reg == 0x0);
  CHECK(initial_state(TenantKind::kDownCounter4, p).reg == 0xF);

  p.seed = 0x1FF;
  CHECK(initial_state(TenantKind::kLfsr8, p).reg == 0xFF);  // masked to width
  p.seed = 0x100;
  CHECK(test::code_of([&] { initial_state(TenantKind::kLfsr8, p); }) ==
        ErrorCode::kBadConfigFile);
  p.seed = 0;
  CHECK(test::code_of([&] { initial_state(TenantKind::kLfsr32, p); }) ==
        ErrorCode::kBadConfigFile);

  p.seed = 0xC0FFEE;
  p.chain_len = 3;
  TenantState s = initial_state(TenantKind::kBramChain, p);
  CHECK(s.reg == 0xC0FFEE);
  CHECK(s.bram == std::vector<word32>{0, 0, 0});
  CHECK(s.acc == 0);
  p.chain_len = 0;
  CHECK(test::code_of([&] { initial_state(TenantKind::kBramChain, p); }) ==
        ErrorCode::kBadConfigFile);
}

TEST_CASE("counter trajectories and the pair invariant") {
  TenantParams p;
  TenantState up = initial_state(TenantKind::kUpCounter4, p);
  TenantState dn = initial_state(TenantKind::kDownCounter4, p);

  up = oracle_replay(TenantKind::kUpCounter4, p, up, 3, true);
  dn = oracle_replay(TenantKind::kDownCounter4, p, dn, 3, true);
  CHECK(up.reg == 0x3);
  CHECK(dn.reg == 0xC);

  up = oracle_replay(TenantKind::kUpCounter4, p, up, 4, true);
  dn = oracle_replay(TenantKind::kDownCounter4, p, dn, 4, true);
  CHECK(up.reg == 0x7);
  CHECK(dn.reg == 0x8);

  for (int i = 0; i < 100; ++i) {
    up = oracle_replay(TenantKind::kUpCounter4, p, up, 1, true);
    dn = oracle_replay(TenantKind::kDownCounter4, p, dn, 1, true);
    CHECK(((up.reg + dn.reg) & 0xF) == 0xF);
  }
}

TEST_CASE("update line gates counters but not free-running tenants") {
  TenantParams p;
  TenantState up = initial_state(TenantKind::kUpCounter4, p);
  CHECK(oracle_replay(TenantKind::kUpCounter4, p, up, 50, false).reg == 0x0);
  CHECK(oracle_replay(TenantKind::kUpCounter4, p, up, 0, true).reg == 0x0);

  p.seed = 0x01;
  TenantState l = initial_state(TenantKind::kLfsr8, p);
  CHECK(oracle_replay(TenantKind::kLfsr8, p, l, 8, false).reg ==
        oracle_replay(TenantKind::kLfsr8, p, l, 8, true).reg);

  p.seed = 0xAB;
  p.chain_len = 2;
  TenantState c = initial_state(TenantKind::kBramChain, p);
  CHECK(oracle_replay(TenantKind::kBramChain, p, c, 5, false) ==
        oracle_replay(TenantKind::kBramChain, p, c, 5, true));
}

TEST_CASE("loaded tenants start at the initial state") {
  auto dev = demo();
  TenantParams p;
  p.seed = 0xDEADBEEF;
  auto t = load_design(dev, TenantKind::kLfsr32, "slot4", p);
  CHECK(t->read_state(dev) == initial_state(TenantKind::kLfsr32, p));
  CHECK(read_state(dev, "slot4") == initial_state(TenantKind::kLfsr32, p));
}

TEST_CASE("on-device runs match the oracle for every kind") {
  struct Case {
    TenantKind kind;
    const char* slot;
    TenantParams params;
  };
  std::vector<Case> cases = {
      {TenantKind::kUpCounter4, "slot0", {}},
      {TenantKind::kDownCounter4, "slot1", {}},
      {TenantKind::kBramChain, "slot2", {0x00C0FFEE, {}, 2}},
      {TenantKind::kLfsr8, "slot3", {0x01, {}, 2}},
      {TenantKind::kLfsr32, "slot4", {0xDEADBEEF, {}, 2}},
  };

  auto dev = demo();
  std::vector<std::shared_ptr<TenantInstance>> insts;
  std::vector<TenantState> expect;
  for (const Case& c : cases) {
    insts.push_back(load_design(dev, c.kind, c.slot, c.params));
    expect.push_back(initial_state(c.kind, c.params));
  }

  std::mt19937 rng(22);
  for (int round = 0; round < 20; ++round) {
    bool update = (rng() & 1) != 0;
    std::uint64_t ticks = rng() % 40;
    for (auto& inst : insts) inst->set_update(update);
    dev.step_clock(ticks);
    for (std::size_t i = 0; i < cases.size(); ++i) {
      expect[i] = oracle_replay(cases[i].kind, cases[i].params,
                                std::move(expect[i]), ticks, update);
      REQUIRE(insts[i]->read_state(dev) == expect[i]);
    }
  }
}

TEST_CASE("custom taps reach the device path") {
  auto dev = demo();
  TenantParams p;
  p.seed = 0x5A;
  p.taps = {8, 7};
  auto t = load_design(dev, TenantKind::kLfsr8, "slot3", p);
  dev.step_clock(13);
  CHECK(t->read_state(dev).reg ==
        oracle_replay(TenantKind::kLfsr8, p, initial_state(TenantKind::kLfsr8, p),
                      13, true)
            .reg);
}

TEST_CASE("each chain tick writes bram exactly once") {
  auto dev = demo();
  TenantParams p;
  p.seed = 0x1234;
  p.chain_len = 2;
  load_design(dev, TenantKind::kBramChain, "slot2", p);
  std::size_t before = dev.log().count(fabricsim::EffectKind::kBramWrite);
  dev.step_clock(7);
  CHECK(dev.log().count(fabricsim::EffectKind::kBramWrite) == before + 7);
}

TEST_CASE("slot bookkeeping") {
  auto dev = demo();
  load_design(dev, TenantKind::kUpCounter4, "slot0", {});
  CHECK(test::code_of([&] {
          load_design(dev, TenantKind::kDownCounter4, "slot0", {});
        }) == ErrorCode::kSlotOverlap);
  CHECK(test::code_of([&] { read_state(dev, "slot9"); }) ==
        ErrorCode::kUnknownSlot);
  CHECK(test::code_of([&] { set_update(dev, "slot9", true); }) ==
        ErrorCode::kUnknownSlot);

  // Counter in a slot without the right cells.
  CHECK(test::code_of([&] {
          load_design(dev, TenantKind::kBramChain, "slot1", {});
        }) == ErrorCode::kBadConfigFile);
  // Chain longer than the mapped memory.
  CHECK(test::code_of([&] {
          load_design(dev, TenantKind::kBramChain, "slot2",
                      {0x1, {}, 99});
        }) == ErrorCode::kBadConfigFile);
}

TEST_CASE("lutram configuration is a pure function of the seed") {
  TenantParams p;
  p.seed = 0x01;
  auto a = demo();
  auto b = demo();
  load_design(a, TenantKind::kLfsr8, "slot3", p);
  load_design(b, TenantKind::kLfsr8, "slot3", p);
  for (const auto& far : a.slot_frames("slot3")) {
    CHECK(a.frame_at(far) == b.frame_at(far));
  }

  // A seed differing at bit 16 flips every sampled pattern bit.
  p.seed = 0x00010001;
  auto c = demo();
  load_design(c, TenantKind::kLfsr8, "slot3", p);
  bool differs = false;
  for (const auto& far : a.slot_frames("slot3")) {
    if (!(a.frame_at(far) == c.frame_at(far))) differs = true;
  }
  CHECK(differs);
}
