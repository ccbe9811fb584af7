// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "doctest.h"
#include "epoch/bitcodec/logic_location.hpp"
#include "helpers.hpp"

using namespace epoch;
using namespace epoch::bitcodec;

TEST_CASE("single record parses into its fields") {
  auto entries = parse_logic_location(
      "Bit 0 0x0042011E 12 5 Block=SLICE_X0Y0 Kind=FF Net=ctr_reg[0] "
      "Slot=slot0\n");
  REQUIRE(entries.size() == 1);
  const auto& e = entries[0];
  CHECK(e.seq == 0);
  CHECK(far_encode(e.far) == 0x0042011E);
  CHECK(e.frame_word == 12);
  CHECK(e.frame_bit == 5);
  CHECK(e.block_site == "SLICE_X0Y0");
  CHECK(e.kind == ElementKind::kFf);
  CHECK(e.design_path == "ctr_reg[0]");
  CHECK(e.slot_id == "slot0");
  CHECK(design_path_index(e.design_path) == 0);
}

TEST_CASE("empty input and comments yield an empty list") {
  CHECK(parse_logic_location("").empty());
  CHECK(parse_logic_location("# nothing here\n\n").empty());
}

TEST_CASE("malformed records carry their line number") {
  auto err = test::code_of([] {
    parse_logic_location(
        "# header\n"
        "Bit 0 0xZZ 12 5 Block=A Kind=FF Net=n Slot=s\n");
  });
  CHECK(err == ErrorCode::kMalformedLine);
  try {
    parse_logic_location("\nBit 0 0xZZ 1 2 Block=A Kind=FF Net=n Slot=s\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("element kinds parse and unknown kinds fail") {
  auto entries = parse_logic_location(
      "Bit 0 0x00C20180 4 0 Block=RAMB36_X0Y0 Kind=BRAM Net=mem[0] Slot=s2\n"
      "Bit 1 0x00420280 8 0 Block=DSP48_X0Y0 Kind=DSP Net=acc Slot=s2\n"
      "Bit 2 0x004203A0 9 3 Block=SLICE_X9Y1 Kind=LUTRAM Net=tbl[3] Slot=s3\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].kind == ElementKind::kBram);
  CHECK(entries[1].kind == ElementKind::kDsp);
  CHECK(entries[2].kind == ElementKind::kLutRam);

  CHECK(test::code_of([] {
          parse_logic_location(
              "Bit 0 0x0 1 2 Block=A Kind=FLIPFLOP Net=n Slot=s\n");
        }) == ErrorCode::kMalformedLine);
}

TEST_CASE("format and parse round-trip the demo cell map") {
  std::string text = test::read_fixture("demo_cells.ll");
  auto entries = parse_logic_location(text);
  REQUIRE(entries.size() == 91);
  auto again = parse_logic_location(format_logic_location(entries));
  REQUIRE(again.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(again[i].seq == entries[i].seq);
    CHECK(again[i].far == entries[i].far);
    CHECK(again[i].frame_word == entries[i].frame_word);
    CHECK(again[i].frame_bit == entries[i].frame_bit);
    CHECK(again[i].design_path == entries[i].design_path);
    CHECK(again[i].slot_id == entries[i].slot_id);
  }
}

TEST_CASE("design path index extraction") {
  CHECK(design_path_index("ctr_reg[15]") == 15);
  CHECK(design_path_index("acc") == -1);
  CHECK(design_path_index("a[2]b") == -1);
}
