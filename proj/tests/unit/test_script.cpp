// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "doctest.h"
#include "epoch/cli/script.hpp"
#include "helpers.hpp"

using namespace epoch;
using namespace epoch::cli;

namespace {

ScriptStep one(const std::string& line) {
  auto steps = parse_script(line);
  REQUIRE(steps.size() == 1);
  return steps[0];
}

std::optional<std::string> parse_error(const std::string& text) {
  try {
    parse_script(text);
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::kScriptParse);
    return e.what();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("load steps carry slot, kind and parameters") {
  ScriptStep s = one("load slot2 bramchain seed=0x00C0FFEE len=2");
  CHECK(s.kind == ScriptStep::Kind::kLoad);
  CHECK(s.slot == "slot2");
  CHECK(s.tenant_kind == tenants::TenantKind::kBramChain);
  CHECK(s.params.seed == 0x00C0FFEE);
  CHECK(s.params.chain_len == 2);
  CHECK(s.params.taps.empty());
  CHECK(s.line_no == 1);
  CHECK(s.text == "load slot2 bramchain seed=0x00C0FFEE len=2");

  ScriptStep t = one("load slot3 lfsr8 taps=8,6,5,4 seed=1");
  CHECK(t.params.taps == std::vector<std::uint8_t>{8, 6, 5, 4});
  CHECK(t.params.seed == 1);
}

TEST_CASE("tick steps take a count and an optional update line") {
  ScriptStep s = one("tick 100");
  CHECK(s.kind == ScriptStep::Kind::kTick);
  CHECK(s.count == 100);
  CHECK(s.update == -1);

  CHECK(one("tick 8 update=1").update == 1);
  CHECK(one("tick 8 update=0").update == 0);
  CHECK(one("tick 0x10").count == 16);
}

TEST_CASE("slot-addressed steps") {
  CHECK(one("update slot0 1").kind == ScriptStep::Kind::kUpdate);
  CHECK(one("update slot0 0").update == 0);
  CHECK(one("save slot1").kind == ScriptStep::Kind::kSave);
  CHECK(one("restore slot1").kind == ScriptStep::Kind::kRestore);
  CHECK(one("blank slot4").kind == ScriptStep::Kind::kBlank);
  CHECK(one("save slot1").slot == "slot1");
}

TEST_CASE("bare steps") {
  CHECK(one("gsr").kind == ScriptStep::Kind::kGsr);
  CHECK(one("clock stop").kind == ScriptStep::Kind::kClock);
  CHECK_FALSE(one("clock stop").clock_run);
  CHECK(one("clock start").clock_run);
}

TEST_CASE("assertions") {
  ScriptStep s = one("assert slot0 0x3");
  CHECK(s.kind == ScriptStep::Kind::kAssertReg);
  CHECK(s.slot == "slot0");
  CHECK(s.value == 3);

  ScriptStep o = one("assert-oracle slot2");
  CHECK(o.kind == ScriptStep::Kind::kAssertOracle);
  CHECK(o.slot == "slot2");
}

TEST_CASE("comments and blank lines vanish, line numbers persist") {
  auto steps = parse_script(
      "# full line comment\n"
      "\n"
      "load slot0 upcounter4\n"
      "tick 3 # trailing comment\n"
      "   \n"
      "assert slot0 0x3\n");
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].line_no == 3);
  CHECK(steps[1].line_no == 4);
  CHECK(steps[1].text == "tick 3");
  CHECK(steps[2].line_no == 6);
}

TEST_CASE("parse failures name the offending line") {
  auto err = parse_error("load slot0 upcounter4\nwobble slot0\n");
  REQUIRE(err.has_value());
  CHECK(err->find("line 2") != std::string::npos);
  CHECK(err->find("wobble") != std::string::npos);

  CHECK(parse_error("tick\n").has_value());
  CHECK(parse_error("load slot0\n").has_value());
  CHECK(parse_error("load slot0 nosuchkind\n").has_value());
  CHECK(parse_error("load slot0 lfsr8 seed\n").has_value());
  CHECK(parse_error("load slot0 lfsr8 color=red\n").has_value());
  CHECK(parse_error("load slot0 lfsr8 taps=\n").has_value());
  CHECK(parse_error("tick ten\n").has_value());
  CHECK(parse_error("tick 5 update=2\n").has_value());
  CHECK(parse_error("tick 5 fast\n").has_value());
  CHECK(parse_error("update slot0 yes\n").has_value());
  CHECK(parse_error("update slot0\n").has_value());
  CHECK(parse_error("clock pause\n").has_value());
  CHECK(parse_error("assert slot0\n").has_value());
  CHECK(parse_error("assert slot0 1y\n").has_value());
  CHECK(parse_error("save\n").has_value());
}

TEST_CASE("the shipped demo scripts parse") {
  auto counters = parse_script(test::read_fixture("demo_counters.script"));
  CHECK(counters.size() > 5);
  CHECK(counters.front().kind == ScriptStep::Kind::kLoad);

  auto bram = parse_script(test::read_fixture("demo_bram.script"));
  CHECK_FALSE(bram.empty());
  auto lfsr = parse_script(test::read_fixture("lfsr_roundtrip.script"));
  CHECK_FALSE(lfsr.empty());
}
