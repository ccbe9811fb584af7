// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "epoch/bitcodec/frame.hpp"
#include "epoch/bitcodec/frame_address.hpp"
#include "epoch/bitcodec/logic_location.hpp"
#include "epoch/fabricsim/effect_log.hpp"
#include "epoch/fabricsim/geometry.hpp"
#include "epoch/words.hpp"

namespace epoch::fabricsim {

class DeviceModel;

// Attached tenant logic. on_tick runs once per configuration-clock cycle
// while the clock is running and may only touch the live planes (set_ff,
// write_word_cell).
class TickHook {
 public:
  virtual ~TickHook() = default;
  virtual const std::string& slot() const = 0;
  virtual void on_tick(DeviceModel& dev) = 0;
};

// Control registers reachable from the processing system, not through the
// configuration port.
enum class SlcrRegister : std::uint8_t { kUnlock, kThrottle };

// One mapped cell. The entry names the config-plane position; ff_value and
// word_value are the live plane (user flip-flops, BRAM/DSP output words).
struct CellRecord {
  bitcodec::LogicLocationEntry entry;
  bool ff_value = false;
  word32 word_value = 0;
};

// Frame words where readback of a BRAM-type frame carries a non-content
// artifact bit instead of memory data.
bool is_bram_artifact_word(std::size_t word);
inline constexpr std::size_t kBramArtifactBit = 18;

// Simulated configuration fabric: configuration memory organised as frames,
// a PCAP-style streaming port, the capture/restore global signals and the
// processing-system clock controls.
//
// Two planes exist per mapped cell. Configuration memory is the save/restore
// plane; live values sit beside it. GCAPTURE is the only operation moving
// FF live values into configuration memory, a GSR pulse is the only one
// moving configuration memory into live values. BRAM and DSP word cells
// write through to configuration memory on every tenant write and are
// reloaded from it by GSR.
class DeviceModel {
 public:
  // Validates every binding against the geometry. Throws CellOutsideGeometry,
  // DuplicateCell, BadConfigFile.
  DeviceModel(DeviceGeometry geometry,
              std::vector<bitcodec::LogicLocationEntry> cells);

  // Streams words into the configuration port. The port is a resynchronising
  // scanner: words before a sync word are ignored, packet state survives
  // across calls, malformed-but-synced words are logged and skipped. Device
  // errors (IdcodeMismatch, WriteWhileNotWcfg, MissingPaddingFrame,
  // CrcMismatch, ReadbackNotArmed, CountMismatch, FarOutOfRange, OrphanType2)
  // throw after logging.
  void pcap_write(std::span<const word32> words);

  // Drains the armed readback stream. word_count must equal the armed length
  // exactly (CountMismatch). With nothing armed throws ReadbackNotArmed, or
  // NotSynced when the port has never seen a sync word.
  std::vector<word32> pcap_read(std::size_t word_count);

  void slcr_write(SlcrRegister reg, word32 value);
  bool slcr_locked() const { return slcr_locked_; }
  bool clock_running() const { return clock_running_; }

  // Pulses the global set/reset net: every FF and word cell reloads its
  // config-plane value.
  void gsr_pulse();

  // Advances the tenant clock. Gated: does nothing while the clock is
  // stopped.
  void step_clock(std::uint64_t cycles);
  std::uint64_t cycle() const { return cycle_; }

  void set_port_clock_hz(double hz) { port_clock_hz_ = hz; }
  double port_clock_hz() const { return port_clock_hz_; }
  // Reports controller-inserted pacing between consecutive readbacks; feeds
  // the freeze model.
  void note_interframe_gap_us(double us) { gap_since_last_arm_us_ += us; }

  // Tenant attachment. One hook per slot (SlotOverlap).
  void attach(std::shared_ptr<TickHook> hook);
  void detach(const std::string& slot);
  TickHook* hook(const std::string& slot) const;

  // Cell access. Lookup by design path throws BadConfigFile for unknown
  // names; index-based accessors are unchecked hot paths for tenants.
  std::size_t cell_index(const std::string& design_path) const;
  const std::vector<CellRecord>& cells() const { return cells_; }

  bool ff(std::size_t idx) const { return cells_[idx].ff_value; }
  void set_ff(std::size_t idx, bool v) { cells_[idx].ff_value = v; }
  word32 word_cell(std::size_t idx) const { return cells_[idx].word_value; }
  void write_word_cell(std::size_t idx, word32 v);

  // Load-time initialisation: writes both planes without going through the
  // port. LUTRAM cells have no live plane and take config bits only.
  void init_ff(std::size_t idx, bool v);
  void init_word(std::size_t idx, word32 v);
  void init_config_bit(std::size_t idx, bool v);

  const DeviceGeometry& geometry() const { return geometry_; }
  const EffectLog& log() const { return log_; }
  EffectLog& log() { return log_; }
  bool synced() const { return synced_; }
  bool glutmask_enabled() const { return (ctl0_ & kGlutmaskBit) != 0; }

  // Raw configuration memory. frame_at returns an all-zero frame for valid
  // addresses that were never written; FarOutOfRange otherwise.
  bitcodec::Frame frame_at(const bitcodec::FrameAddress& far) const;
  const std::map<word32, bitcodec::Frame>& config_memory() const {
    return config_mem_;
  }

  // Sorted unique frame addresses holding at least one cell of the slot.
  std::vector<bitcodec::FrameAddress> slot_frames(
      const std::string& slot) const;

  // Explicit checksum verification hook for CRC register writes; unset means
  // any explicit CRC write mismatches. RCRC does not consult it.
  using CrcCheckHook = std::function<bool(word32 written)>;
  void set_crc_check_hook(CrcCheckHook hook) { crc_hook_ = std::move(hook); }

  static constexpr word32 kGlutmaskBit = 0x00000100;

 private:
  bitcodec::Frame& config_frame(word32 far_word);
  void apply_register_write(std::uint8_t reg, std::vector<word32> payload);
  void execute_cmd(word32 code);
  void write_frame(const bitcodec::FrameAddress& far,
                   const bitcodec::Frame& frame);
  std::vector<word32> serve_frame(const bitcodec::FrameAddress& far) const;
  void commit_pending_readback();
  void do_gsr();
  void process_synced_word(word32 w);

  DeviceGeometry geometry_;
  std::vector<CellRecord> cells_;
  std::unordered_map<std::string, std::size_t> cell_by_path_;
  std::map<word32, std::vector<std::size_t>> cells_by_far_;
  std::map<word32, bitcodec::Frame> config_mem_;
  std::vector<std::shared_ptr<TickHook>> hooks_;

  EffectLog log_;

  // Port FSM.
  bool synced_ = false;
  bool ever_synced_ = false;
  std::optional<std::uint8_t> last_type1_reg_;
  bool collecting_ = false;
  std::uint8_t collect_reg_ = 0;
  word32 collect_count_ = 0;
  std::vector<word32> collect_buf_;
  std::optional<word32> pending_fdro_count_;
  std::vector<word32> readback_queue_;

  // Device registers.
  word32 cmd_reg_ = 0;
  word32 far_reg_ = 0;
  word32 ctl0_ = 0;
  word32 mask_ = 0;
  word32 crc_reg_ = 0;
  bool crc_pending_ = false;
  bool shutdown_ = false;

  // Clock and SLCR.
  bool slcr_locked_ = true;
  bool clock_running_ = true;
  std::uint64_t cycle_ = 0;
  double port_clock_hz_ = 50.0e6;
  double gap_since_last_arm_us_ = 0.0;
  bool armed_before_ = false;

  CrcCheckHook crc_hook_;
};

}  // namespace epoch::fabricsim
