// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/cli/executor.hpp"

#include <sstream>

#include "epoch/ctl/timing.hpp"
#include "epoch/error.hpp"
#include "epoch/words.hpp"

namespace epoch::cli {

using ctl::PortOp;
using tenants::TenantState;

namespace {

// Slot regions mimic the documented dump layout: the first two slots land at
// the reference addresses, later ones are packed above them.
constexpr std::uint64_t kFirstRegionBase = 0x0000000A;
constexpr std::uint64_t kSecondRegionBase = 0x000B0000;
constexpr std::uint64_t kPackedRegionBase = 0x00200000;
constexpr std::uint64_t kRegionAlign = 0x1000;

std::string describe_mismatch(const TenantState& device,
                              const TenantState& oracle) {
  std::ostringstream os;
  if (device.reg != oracle.reg) {
    os << "reg " << format_word(device.reg) << " vs oracle "
       << format_word(oracle.reg);
    return os.str();
  }
  for (std::size_t i = 0; i < oracle.bram.size() && i < device.bram.size();
       ++i) {
    if (device.bram[i] != oracle.bram[i]) {
      os << "bram[" << i << "] " << format_word(device.bram[i])
         << " vs oracle " << format_word(oracle.bram[i]);
      return os.str();
    }
  }
  if (device.bram.size() != oracle.bram.size()) {
    os << "bram size " << device.bram.size() << " vs oracle "
       << oracle.bram.size();
    return os.str();
  }
  if (device.acc != oracle.acc) {
    os << "acc " << format_word(device.acc) << " vs oracle "
       << format_word(oracle.acc);
    return os.str();
  }
  return "states match";
}

}  // namespace

ScriptExecutor::ScriptExecutor(fabricsim::DeviceModel& dev, ExecOptions options)
    : dev_(dev), options_(std::move(options)), next_base_(kPackedRegionBase) {}

std::uint64_t ScriptExecutor::next_region_base(std::uint32_t capacity_frames) {
  std::uint64_t base;
  if (regions_made_ == 0) {
    base = kFirstRegionBase;
  } else if (regions_made_ == 1) {
    base = kSecondRegionBase;
  } else {
    base = next_base_;
    std::uint64_t size = ctl::DramStore::region_size_bytes(capacity_frames);
    next_base_ += (size + kRegionAlign - 1) / kRegionAlign * kRegionAlign;
  }
  ++regions_made_;
  return base;
}

void ScriptExecutor::shadow_gsr() {
  for (auto& [slot, shadow] : shadows_) shadow.live = shadow.config;
}

StepResult ScriptExecutor::execute(const ScriptStep& step, std::size_t index) {
  StepResult result;
  result.index = index;
  result.text = step.text;
  result.ok = true;

  switch (step.kind) {
    case ScriptStep::Kind::kLoad: {
      auto frames = dev_.slot_frames(step.slot);
      if (frames.empty()) {
        raise(ErrorCode::kUnknownSlot,
              "slot " + step.slot + " maps no cells in this device");
      }
      auto capacity = static_cast<std::uint32_t>(frames.size());
      store_.add_region(step.slot, next_region_base(capacity), capacity);
      tenants::load_design(dev_, step.tenant_kind, step.slot, step.params);
      SlotShadow shadow;
      shadow.kind = step.tenant_kind;
      shadow.params = step.params;
      shadow.live = tenants::initial_state(step.tenant_kind, step.params);
      shadow.config = shadow.live;
      shadows_[step.slot] = std::move(shadow);
      break;
    }
    case ScriptStep::Kind::kTick: {
      if (step.update >= 0) {
        for (auto& [slot, shadow] : shadows_) {
          shadow.update = step.update == 1;
          tenants::set_update(dev_, slot, shadow.update);
        }
      }
      bool running = dev_.clock_running();
      dev_.step_clock(step.count);
      if (running) {
        for (auto& [slot, shadow] : shadows_) {
          shadow.live = tenants::oracle_replay(shadow.kind, shadow.params,
                                               std::move(shadow.live),
                                               step.count, shadow.update);
          shadow.config.bram = shadow.live.bram;  // write-through plane
          shadow.config.acc = shadow.live.acc;
        }
      }
      result.detail = running ? "" : "clock stopped, no cycles elapsed";
      break;
    }
    case ScriptStep::Kind::kUpdate: {
      auto it = shadows_.find(step.slot);
      if (it == shadows_.end()) {
        raise(ErrorCode::kUnknownSlot, "slot " + step.slot + " not loaded");
      }
      it->second.update = step.update == 1;
      tenants::set_update(dev_, step.slot, it->second.update);
      break;
    }
    case ScriptStep::Kind::kSave: {
      ctl::Snapshot snap =
          ctl::context_save(dev_, step.slot, store_, options_.ctl);
      handles_[step.slot] = snap;
      for (auto& [slot, shadow] : shadows_) {
        shadow.config.reg = shadow.live.reg;  // global capture
      }
      auto it = shadows_.find(step.slot);
      if (it != shadows_.end()) it->second.saved = it->second.config;
      auto n = static_cast<std::uint64_t>(snap.frames.size());
      result.modeled_us =
          ctl::estimate_timing_us(options_.ctl.timing, n, PortOp::kSave);
      result.detail = std::to_string(n) + " frames";
      save_frames_total_ = save_frames_total_ + n;
      save_us_total_ += result.modeled_us;
      break;
    }
    case ScriptStep::Kind::kRestore: {
      auto handle = handles_.find(step.slot);
      if (handle == handles_.end()) {
        raise(ErrorCode::kUnknownSlot,
              "slot " + step.slot + " has no saved snapshot");
      }
      ctl::context_restore(dev_, handle->second, store_, options_.ctl);
      auto it = shadows_.find(step.slot);
      if (it != shadows_.end() && it->second.saved) {
        it->second.config = *it->second.saved;
      }
      shadow_gsr();
      auto n = static_cast<std::uint64_t>(handle->second.frames.size());
      result.modeled_us =
          ctl::estimate_timing_us(options_.ctl.timing, n, PortOp::kRestore);
      result.detail = std::to_string(n) + " frames";
      restore_frames_total_ += n;
      restore_us_total_ += result.modeled_us;
      break;
    }
    case ScriptStep::Kind::kBlank: {
      ctl::blank_slot(dev_, step.slot, options_.ctl);
      auto it = shadows_.find(step.slot);
      if (it != shadows_.end()) {
        TenantState zero;
        zero.reg = 0;
        zero.bram.assign(it->second.config.bram.size(), 0);
        zero.acc = 0;
        it->second.config = std::move(zero);
      }
      shadow_gsr();
      break;
    }
    case ScriptStep::Kind::kGsr:
      dev_.gsr_pulse();
      shadow_gsr();
      break;
    case ScriptStep::Kind::kClock:
      if (step.clock_run) {
        ctl::clock_start(dev_);
      } else {
        ctl::clock_stop(dev_);
      }
      break;
    case ScriptStep::Kind::kAssertReg: {
      word32 reg = tenants::read_state(dev_, step.slot).reg;
      if (reg != step.value) {
        result.ok = false;
        result.detail = "device has " + format_word(reg) + ", expected " +
                        format_word(step.value);
      } else {
        result.detail = "observed " + format_word(reg);
      }
      break;
    }
    case ScriptStep::Kind::kAssertOracle: {
      auto it = shadows_.find(step.slot);
      if (it == shadows_.end()) {
        raise(ErrorCode::kUnknownSlot, "slot " + step.slot + " not loaded");
      }
      TenantState device_state = tenants::read_state(dev_, step.slot);
      if (!(device_state == it->second.live)) {
        result.ok = false;
        result.detail = describe_mismatch(device_state, it->second.live);
      } else {
        result.detail = "device matches oracle";
      }
      break;
    }
  }
  result.cycle = dev_.cycle();
  return result;
}

RunResult ScriptExecutor::run(std::span<const ScriptStep> steps) {
  RunResult run;
  run.pass = true;
  std::size_t index = 0;
  for (const ScriptStep& step : steps) {
    ++index;
    StepResult result;
    try {
      result = execute(step, index);
    } catch (const std::exception& e) {
      result.index = index;
      result.text = step.text;
      result.cycle = dev_.cycle();
      result.ok = false;
      result.detail = std::string("error: ") + e.what();
      run.steps.push_back(std::move(result));
      run.pass = false;
      break;  // device state is unreliable past a hard error
    }
    if (!result.ok) run.pass = false;
    run.steps.push_back(std::move(result));
  }
  run.save_frames = save_frames_total_;
  run.restore_frames = restore_frames_total_;
  run.save_us = save_us_total_;
  run.restore_us = restore_us_total_;
  return run;
}

}  // namespace epoch::cli
