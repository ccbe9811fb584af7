// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "epoch/tenants/tenant.hpp"
#include "epoch/words.hpp"

namespace epoch::cli {

// Scenario script line. Grammar (one step per line, '#' comments):
//   load <slot> <kind> [seed=<u32>] [len=<n>] [taps=<a,b,...>]
//   tick <n> [update=0|1]
//   update <slot> 0|1
//   save <slot>
//   restore <slot>
//   blank <slot>
//   gsr
//   clock stop|start
//   assert <slot> <value>
//   assert-oracle <slot>
struct ScriptStep {
  enum class Kind {
    kLoad,
    kTick,
    kUpdate,
    kSave,
    kRestore,
    kBlank,
    kGsr,
    kClock,
    kAssertReg,
    kAssertOracle,
  };

  Kind kind = Kind::kGsr;
  std::string slot;
  tenants::TenantKind tenant_kind = tenants::TenantKind::kUpCounter4;
  tenants::TenantParams params;
  std::uint64_t count = 0;  // tick cycles
  int update = -1;          // tick: -1 leaves update lines alone
  word32 value = 0;         // assert comparison value
  bool clock_run = false;   // clock step target state
  std::size_t line_no = 0;
  std::string text;  // raw line, for reports
};

// Throws ScriptParse with the offending line number.
std::vector<ScriptStep> parse_script(std::string_view text);

}  // namespace epoch::cli
