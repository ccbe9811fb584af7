// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "epoch/fabricsim/device_model.hpp"
#include "epoch/words.hpp"

namespace epoch::tenants {

// Reference tenant designs. All state a tenant owns lives in mapped device
// cells; the instance object itself is stateless apart from the update line,
// so save/restore correctness is carried entirely by the fabric.
enum class TenantKind : std::uint8_t {
  kUpCounter4,
  kDownCounter4,
  kLfsr8,
  kLfsr32,
  kBramChain,
};

const char* to_string(TenantKind k);
// Accepts the lower-case names used in scenario scripts ("upcounter4", ...).
// Throws BadConfigFile for unknown names.
TenantKind parse_tenant_kind(const std::string& name);

struct TenantParams {
  word32 seed = 1;
  std::vector<std::uint8_t> taps;  // empty selects the kind's default taps
  std::uint32_t chain_len = 2;

  bool operator==(const TenantParams&) const = default;
};

// Architectural state visible to save/restore. reg is the counter value,
// LFSR state or chain digest; bram/acc are used by the BRAM chain only.
struct TenantState {
  word32 reg = 0;
  std::vector<word32> bram;
  word32 acc = 0;

  bool operator==(const TenantState&) const = default;
};

// Left-shift Fibonacci LFSR step. taps name bit positions 1..width; feedback
// is the XOR of bits (tap-1) and shifts in at bit 0.
word32 lfsr_step(word32 state, std::span<const std::uint8_t> taps,
                 unsigned width);

std::vector<std::uint8_t> default_taps(TenantKind kind);

// Digest update of the BRAM chain tenant.
word32 chain_mix(word32 digest);

inline constexpr word32 kChainMacConstant = 0x01000193;

TenantState initial_state(TenantKind kind, const TenantParams& params);

// Pure replay of `ticks` cycles from `start`. The device-independent oracle
// for equivalence tests: a tenant on a fabric must match this exactly.
TenantState oracle_replay(TenantKind kind, const TenantParams& params,
                          TenantState start, std::uint64_t ticks,
                          bool update_asserted);

// A tenant bound to device cells. Created through load_design.
class TenantInstance : public fabricsim::TickHook {
 public:
  TenantInstance(TenantKind kind, std::string slot, TenantParams params);

  const std::string& slot() const override { return slot_; }
  void on_tick(fabricsim::DeviceModel& dev) override;

  TenantKind kind() const { return kind_; }
  const TenantParams& params() const { return params_; }
  void set_update(bool asserted) { update_ = asserted; }
  bool update() const { return update_; }

  TenantState read_state(const fabricsim::DeviceModel& dev) const;

 private:
  friend std::shared_ptr<TenantInstance> load_design(
      fabricsim::DeviceModel& dev, TenantKind kind, const std::string& slot,
      const TenantParams& params);

  void bind(const fabricsim::DeviceModel& dev);
  void load_initial(fabricsim::DeviceModel& dev) const;

  word32 read_reg(const fabricsim::DeviceModel& dev) const;
  void write_reg(fabricsim::DeviceModel& dev, word32 v) const;

  TenantKind kind_;
  std::string slot_;
  TenantParams params_;
  bool update_ = false;
  unsigned width_ = 0;

  // Cell indices resolved at bind time, ordered by design-path index.
  std::vector<std::size_t> ff_cells_;
  std::vector<std::size_t> bram_cells_;
  std::vector<std::size_t> lutram_cells_;
  std::size_t dsp_cell_ = static_cast<std::size_t>(-1);
};

// Binds the slot's mapped cells, attaches the tick hook (SlotOverlap when the
// slot is occupied) and writes the initial configuration into both planes.
// Throws BadConfigFile when the cell map does not provide what the kind
// needs.
std::shared_ptr<TenantInstance> load_design(fabricsim::DeviceModel& dev,
                                            TenantKind kind,
                                            const std::string& slot,
                                            const TenantParams& params);

// Slot-addressed conveniences over the attached hook. Throw UnknownSlot.
void set_update(fabricsim::DeviceModel& dev, const std::string& slot,
                bool asserted);
TenantState read_state(const fabricsim::DeviceModel& dev,
                       const std::string& slot);
TenantInstance& instance(const fabricsim::DeviceModel& dev,
                         const std::string& slot);

}  // namespace epoch::tenants
