// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epoch/cli/script.hpp"
#include "epoch/ctl/controller.hpp"
#include "epoch/ctl/dram_store.hpp"
#include "epoch/fabricsim/device_model.hpp"
#include "epoch/tenants/tenant.hpp"

namespace epoch::cli {

struct ExecOptions {
  ctl::ControllerOptions ctl;
};

struct StepResult {
  std::size_t index = 0;  // 1-based
  std::string text;
  std::uint64_t cycle = 0;  // device cycle after the step
  bool ok = false;
  std::string detail;      // failure reason or extra info
  double modeled_us = 0.0;  // port cost for save/restore steps
};

struct RunResult {
  std::vector<StepResult> steps;
  bool pass = false;
  std::uint64_t save_frames = 0;
  std::uint64_t restore_frames = 0;
  double save_us = 0.0;
  double restore_us = 0.0;
};

// Runs a scenario against a device, tracking a device-independent oracle per
// slot (pure replay of the intended semantics). assert-oracle compares the
// device's architectural state against it, so flag combinations that break
// the flow (--skip-gsr, --no-bram-fixup) surface as failing steps. Execution
// continues past failed assertions and stops at the first hard error.
class ScriptExecutor {
 public:
  ScriptExecutor(fabricsim::DeviceModel& dev, ExecOptions options);

  RunResult run(std::span<const ScriptStep> steps);

  const ctl::DramStore& store() const { return store_; }

 private:
  struct SlotShadow {
    tenants::TenantKind kind{};
    tenants::TenantParams params;
    tenants::TenantState live;
    tenants::TenantState config;
    std::optional<tenants::TenantState> saved;
    bool update = false;
  };

  StepResult execute(const ScriptStep& step, std::size_t index);
  void shadow_gsr();
  std::uint64_t next_region_base(std::uint32_t capacity_frames);

  fabricsim::DeviceModel& dev_;
  ExecOptions options_;
  ctl::DramStore store_;
  std::map<std::string, SlotShadow> shadows_;
  std::map<std::string, ctl::Snapshot> handles_;
  std::uint64_t next_base_ = 0;
  std::size_t regions_made_ = 0;
  std::uint64_t save_frames_total_ = 0;
  std::uint64_t restore_frames_total_ = 0;
  double save_us_total_ = 0.0;
  double restore_us_total_ = 0.0;
};

}  // namespace epoch::cli
