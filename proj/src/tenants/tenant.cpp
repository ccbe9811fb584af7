// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/tenants/tenant.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "epoch/bitcodec/logic_location.hpp"
#include "epoch/error.hpp"

namespace epoch::tenants {

using bitcodec::ElementKind;
using fabricsim::DeviceModel;

namespace {

unsigned reg_width(TenantKind kind) {
  switch (kind) {
    case TenantKind::kUpCounter4:
    case TenantKind::kDownCounter4:
      return 4;
    case TenantKind::kLfsr8:
      return 8;
    case TenantKind::kLfsr32:
    case TenantKind::kBramChain:
      return 32;
  }
  return 0;
}

word32 width_mask(unsigned width) {
  return width == 32 ? 0xFFFFFFFF : ((word32{1} << width) - 1);
}

// Deterministic static configuration for LUTRAM cells; load-time only, never
// part of the architectural state.
bool lutram_pattern_bit(word32 seed, std::size_t i) {
  return (((0x9E3779B9u * static_cast<word32>(i + 1)) + seed) >> 16) & 1;
}

TenantState tick_once(TenantKind kind, const TenantParams& params,
                      TenantState s, bool update) {
  switch (kind) {
    case TenantKind::kUpCounter4:
      if (update) s.reg = (s.reg + 1) & 0xF;
      break;
    case TenantKind::kDownCounter4:
      if (update) s.reg = (s.reg - 1) & 0xF;
      break;
    case TenantKind::kLfsr8:
      s.reg = lfsr_step(s.reg,
                        params.taps.empty() ? default_taps(kind) : params.taps,
                        8);
      break;
    case TenantKind::kLfsr32:
      s.reg = lfsr_step(s.reg,
                        params.taps.empty() ? default_taps(kind) : params.taps,
                        32);
      break;
    case TenantKind::kBramChain: {
      s.reg = chain_mix(s.reg);
      s.bram[s.reg % s.bram.size()] = s.reg;
      s.acc += s.reg * kChainMacConstant;
      break;
    }
  }
  return s;
}

}  // namespace

const char* to_string(TenantKind k) {
  switch (k) {
    case TenantKind::kUpCounter4: return "upcounter4";
    case TenantKind::kDownCounter4: return "downcounter4";
    case TenantKind::kLfsr8: return "lfsr8";
    case TenantKind::kLfsr32: return "lfsr32";
    case TenantKind::kBramChain: return "bramchain";
  }
  return "?";
}

TenantKind parse_tenant_kind(const std::string& name) {
  if (name == "upcounter4") return TenantKind::kUpCounter4;
  if (name == "downcounter4") return TenantKind::kDownCounter4;
  if (name == "lfsr8") return TenantKind::kLfsr8;
  if (name == "lfsr32") return TenantKind::kLfsr32;
  if (name == "bramchain") return TenantKind::kBramChain;
  raise(ErrorCode::kBadConfigFile, "unknown tenant kind '" + name + "'");
}

std::vector<std::uint8_t> default_taps(TenantKind kind) {
  switch (kind) {
    case TenantKind::kLfsr8:
      return {8, 6, 5, 4};
    case TenantKind::kLfsr32:
      return {32, 22, 2, 1};
    default:
      return {};
  }
}

word32 lfsr_step(word32 state, std::span<const std::uint8_t> taps,
                 unsigned width) {
  word32 fb = 0;
  for (std::uint8_t tap : taps) fb ^= (state >> (tap - 1)) & 1;
  return ((state << 1) | fb) & width_mask(width);
}

word32 chain_mix(word32 digest) {
  return std::rotl(digest, 5) + (digest ^ 0x9E3779B9u);
}

TenantState initial_state(TenantKind kind, const TenantParams& params) {
  TenantState s;
  switch (kind) {
    case TenantKind::kUpCounter4:
      s.reg = 0x0;
      break;
    case TenantKind::kDownCounter4:
      s.reg = 0xF;
      break;
    case TenantKind::kLfsr8:
    case TenantKind::kLfsr32: {
      word32 masked = params.seed & width_mask(reg_width(kind));
      if (masked == 0) {
        raise(ErrorCode::kBadConfigFile, "LFSR seed must be nonzero");
      }
      s.reg = masked;
      break;
    }
    case TenantKind::kBramChain:
      if (params.chain_len == 0) {
        raise(ErrorCode::kBadConfigFile, "chain length must be nonzero");
      }
      s.reg = params.seed;
      s.bram.assign(params.chain_len, 0);
      s.acc = 0;
      break;
  }
  return s;
}

TenantState oracle_replay(TenantKind kind, const TenantParams& params,
                          TenantState start, std::uint64_t ticks,
                          bool update_asserted) {
  TenantState s = std::move(start);
  for (std::uint64_t i = 0; i < ticks; ++i) {
    s = tick_once(kind, params, std::move(s), update_asserted);
  }
  return s;
}

TenantInstance::TenantInstance(TenantKind kind, std::string slot,
                               TenantParams params)
    : kind_(kind),
      slot_(std::move(slot)),
      params_(std::move(params)),
      width_(reg_width(kind)) {}

void TenantInstance::bind(const DeviceModel& dev) {
  std::map<int, std::size_t> ffs;
  std::map<int, std::size_t> brams;
  std::map<int, std::size_t> lutrams;
  const auto& cells = dev.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& e = cells[i].entry;
    if (e.slot_id != slot_) continue;
    int idx = bitcodec::design_path_index(e.design_path);
    switch (e.kind) {
      case ElementKind::kFf:
        if (idx < 0 || !ffs.emplace(idx, i).second) {
          raise(ErrorCode::kBadConfigFile,
                "FF cell " + e.design_path + " needs a unique [k] index");
        }
        break;
      case ElementKind::kBram:
        if (idx < 0 || !brams.emplace(idx, i).second) {
          raise(ErrorCode::kBadConfigFile,
                "BRAM cell " + e.design_path + " needs a unique [k] index");
        }
        break;
      case ElementKind::kLutRam:
        lutrams.emplace(idx >= 0 ? idx : static_cast<int>(lutrams.size()), i);
        break;
      case ElementKind::kDsp:
        if (dsp_cell_ != static_cast<std::size_t>(-1)) {
          raise(ErrorCode::kBadConfigFile,
                "slot " + slot_ + " maps more than one DSP cell");
        }
        dsp_cell_ = i;
        break;
    }
  }

  ff_cells_.clear();
  for (unsigned k = 0; k < width_; ++k) {
    auto it = ffs.find(static_cast<int>(k));
    if (it == ffs.end()) {
      raise(ErrorCode::kBadConfigFile,
            "slot " + slot_ + " maps no FF cell for bit " + std::to_string(k));
    }
    ff_cells_.push_back(it->second);
  }
  if (ffs.size() != width_) {
    raise(ErrorCode::kBadConfigFile,
          "slot " + slot_ + " maps " + std::to_string(ffs.size()) +
              " FF cells, kind needs " + std::to_string(width_));
  }

  bram_cells_.clear();
  if (kind_ == TenantKind::kBramChain) {
    if (params_.chain_len > brams.size()) {
      raise(ErrorCode::kBadConfigFile,
            "chain length " + std::to_string(params_.chain_len) +
                " exceeds the " + std::to_string(brams.size()) +
                " mapped BRAM cells");
    }
    for (std::uint32_t k = 0; k < params_.chain_len; ++k) {
      auto it = brams.find(static_cast<int>(k));
      if (it == brams.end()) {
        raise(ErrorCode::kBadConfigFile,
              "slot " + slot_ + " maps no BRAM cell for word " +
                  std::to_string(k));
      }
      bram_cells_.push_back(it->second);
    }
    if (dsp_cell_ == static_cast<std::size_t>(-1)) {
      raise(ErrorCode::kBadConfigFile,
            "slot " + slot_ + " maps no DSP cell for the accumulator");
    }
  }

  lutram_cells_.clear();
  for (const auto& [idx, cell] : lutrams) lutram_cells_.push_back(cell);
}

void TenantInstance::load_initial(DeviceModel& dev) const {
  TenantState init = initial_state(kind_, params_);
  for (unsigned k = 0; k < width_; ++k) {
    dev.init_ff(ff_cells_[k], ((init.reg >> k) & 1) != 0);
  }
  for (std::size_t k = 0; k < bram_cells_.size(); ++k) {
    dev.init_word(bram_cells_[k], init.bram[k]);
  }
  if (dsp_cell_ != static_cast<std::size_t>(-1)) {
    dev.init_word(dsp_cell_, init.acc);
  }
  for (std::size_t i = 0; i < lutram_cells_.size(); ++i) {
    dev.init_config_bit(lutram_cells_[i], lutram_pattern_bit(params_.seed, i));
  }
}

word32 TenantInstance::read_reg(const DeviceModel& dev) const {
  word32 v = 0;
  for (unsigned k = 0; k < width_; ++k) {
    if (dev.ff(ff_cells_[k])) v |= (word32{1} << k);
  }
  return v;
}

void TenantInstance::write_reg(DeviceModel& dev, word32 v) const {
  for (unsigned k = 0; k < width_; ++k) {
    dev.set_ff(ff_cells_[k], ((v >> k) & 1) != 0);
  }
}

void TenantInstance::on_tick(DeviceModel& dev) {
  switch (kind_) {
    case TenantKind::kUpCounter4:
      if (update_) write_reg(dev, (read_reg(dev) + 1) & 0xF);
      break;
    case TenantKind::kDownCounter4:
      if (update_) write_reg(dev, (read_reg(dev) - 1) & 0xF);
      break;
    case TenantKind::kLfsr8:
    case TenantKind::kLfsr32:
      write_reg(dev,
                lfsr_step(read_reg(dev),
                          params_.taps.empty() ? default_taps(kind_)
                                               : params_.taps,
                          width_));
      break;
    case TenantKind::kBramChain: {
      word32 d = chain_mix(read_reg(dev));
      write_reg(dev, d);
      dev.write_word_cell(bram_cells_[d % bram_cells_.size()], d);
      dev.write_word_cell(dsp_cell_,
                          dev.word_cell(dsp_cell_) + d * kChainMacConstant);
      break;
    }
  }
}

TenantState TenantInstance::read_state(const DeviceModel& dev) const {
  TenantState s;
  s.reg = read_reg(dev);
  s.bram.reserve(bram_cells_.size());
  for (std::size_t idx : bram_cells_) s.bram.push_back(dev.word_cell(idx));
  if (dsp_cell_ != static_cast<std::size_t>(-1)) {
    s.acc = dev.word_cell(dsp_cell_);
  }
  return s;
}

std::shared_ptr<TenantInstance> load_design(DeviceModel& dev, TenantKind kind,
                                            const std::string& slot,
                                            const TenantParams& params) {
  auto tenant = std::make_shared<TenantInstance>(kind, slot, params);
  tenant->bind(dev);
  dev.attach(tenant);
  tenant->load_initial(dev);
  return tenant;
}

TenantInstance& instance(const DeviceModel& dev, const std::string& slot) {
  auto* hook = dev.hook(slot);
  if (hook == nullptr) {
    raise(ErrorCode::kUnknownSlot, "no tenant in slot " + slot);
  }
  auto* tenant = dynamic_cast<TenantInstance*>(hook);
  if (tenant == nullptr) {
    raise(ErrorCode::kUnknownSlot, "slot " + slot + " is not a tenant");
  }
  return *tenant;
}

void set_update(DeviceModel& dev, const std::string& slot, bool asserted) {
  instance(dev, slot).set_update(asserted);
}

TenantState read_state(const DeviceModel& dev, const std::string& slot) {
  return instance(dev, slot).read_state(dev);
}

}  // namespace epoch::tenants
