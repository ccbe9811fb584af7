// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/fabricsim/device_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "epoch/bitcodec/packet.hpp"
#include "epoch/error.hpp"

namespace epoch::fabricsim {

using bitcodec::BlockType;
using bitcodec::ElementKind;
using bitcodec::Frame;
using bitcodec::FrameAddress;
using bitcodec::LogicLocationEntry;

namespace {

constexpr word32 kTypeShift = 29;
constexpr word32 kOpcodeShift = 27;
constexpr word32 kRegisterShift = 13;

bool is_word_cell(ElementKind k) {
  return k == ElementKind::kBram || k == ElementKind::kDsp;
}

}  // namespace

bool is_bram_artifact_word(std::size_t word) {
  if (word < 4 || word > 95) return false;
  if (word < 54) return word % 10 == 4;
  if (word > 54) return word % 10 == 5;
  return false;
}

DeviceModel::DeviceModel(DeviceGeometry geometry,
                         std::vector<LogicLocationEntry> cells)
    : geometry_(std::move(geometry)) {
  geometry_.validate();
  std::set<std::tuple<word32, std::uint8_t, std::uint8_t>> positions;
  cells_.reserve(cells.size());
  for (LogicLocationEntry& e : cells) {
    if (!geometry_.contains(e.far)) {
      raise(ErrorCode::kCellOutsideGeometry,
            e.design_path + " at " + to_string(e.far));
    }
    if (e.frame_word == Frame::kCrcWordIndex) {
      raise(ErrorCode::kBadConfigFile,
            e.design_path + " binds frame word 50, the CRC slot");
    }
    bool bram_frame = e.far.block_type == BlockType::kBram;
    if ((e.kind == ElementKind::kBram) != bram_frame) {
      raise(ErrorCode::kBadConfigFile,
            e.design_path + ": " + std::string(to_string(e.kind)) +
                " cell in a " + to_string(e.far.block_type) + " frame");
    }
    if (e.kind == ElementKind::kBram && is_bram_artifact_word(e.frame_word)) {
      raise(ErrorCode::kBadConfigFile,
            e.design_path + " binds an artifact word of a BRAM frame");
    }
    if (is_word_cell(e.kind) && e.frame_bit != 0) {
      raise(ErrorCode::kBadConfigFile,
            e.design_path + ": word cell with nonzero bit offset");
    }
    word32 far_word = bitcodec::far_encode(e.far);
    std::uint8_t span = is_word_cell(e.kind) ? 32 : 1;
    for (std::uint8_t b = 0; b < span; ++b) {
      auto key = std::make_tuple(far_word, e.frame_word,
                                 static_cast<std::uint8_t>(e.frame_bit + b));
      if (!positions.insert(key).second) {
        raise(ErrorCode::kDuplicateCell,
              e.design_path + " overlaps another cell at " + to_string(e.far) +
                  " word " + std::to_string(e.frame_word));
      }
    }
    if (!cell_by_path_.emplace(e.design_path, cells_.size()).second) {
      raise(ErrorCode::kDuplicateCell,
            "design path " + e.design_path + " appears twice");
    }
    cells_by_far_[far_word].push_back(cells_.size());
    cells_.push_back(CellRecord{std::move(e), false, 0});
  }
}

std::size_t DeviceModel::cell_index(const std::string& design_path) const {
  auto it = cell_by_path_.find(design_path);
  if (it == cell_by_path_.end()) {
    raise(ErrorCode::kBadConfigFile, "no cell named " + design_path);
  }
  return it->second;
}

Frame& DeviceModel::config_frame(word32 far_word) {
  return config_mem_.try_emplace(far_word).first->second;
}

Frame DeviceModel::frame_at(const FrameAddress& far) const {
  if (!geometry_.contains(far)) {
    raise(ErrorCode::kFarOutOfRange,
          to_string(far) + " is not a frame of this geometry");
  }
  auto it = config_mem_.find(bitcodec::far_encode(far));
  return it == config_mem_.end() ? Frame{} : it->second;
}

std::vector<FrameAddress> DeviceModel::slot_frames(
    const std::string& slot) const {
  std::set<word32> words;
  for (const CellRecord& c : cells_) {
    if (c.entry.slot_id == slot) words.insert(bitcodec::far_encode(c.entry.far));
  }
  std::vector<FrameAddress> out;
  out.reserve(words.size());
  for (word32 w : words) out.push_back(bitcodec::far_decode(w));
  return out;
}

void DeviceModel::write_word_cell(std::size_t idx, word32 v) {
  CellRecord& c = cells_[idx];
  c.word_value = v;
  word32 far_word = bitcodec::far_encode(c.entry.far);
  config_frame(far_word)[c.entry.frame_word] = v;
  bool bram = c.entry.kind == ElementKind::kBram;
  log_.emit(bram ? EffectKind::kBramWrite : EffectKind::kDspWrite,
            std::string(bram ? "bram write " : "dsp write ") +
                c.entry.design_path + " " + format_word(v));
}

void DeviceModel::init_ff(std::size_t idx, bool v) {
  CellRecord& c = cells_[idx];
  c.ff_value = v;
  config_frame(bitcodec::far_encode(c.entry.far))
      .set_bit(c.entry.frame_word, c.entry.frame_bit, v);
}

void DeviceModel::init_word(std::size_t idx, word32 v) {
  CellRecord& c = cells_[idx];
  c.word_value = v;
  config_frame(bitcodec::far_encode(c.entry.far))[c.entry.frame_word] = v;
}

void DeviceModel::init_config_bit(std::size_t idx, bool v) {
  CellRecord& c = cells_[idx];
  config_frame(bitcodec::far_encode(c.entry.far))
      .set_bit(c.entry.frame_word, c.entry.frame_bit, v);
}

void DeviceModel::attach(std::shared_ptr<TickHook> hook) {
  for (const auto& h : hooks_) {
    if (h->slot() == hook->slot()) {
      raise(ErrorCode::kSlotOverlap, "slot " + hook->slot() + " is occupied");
    }
  }
  hooks_.push_back(std::move(hook));
}

void DeviceModel::detach(const std::string& slot) {
  auto it = std::find_if(hooks_.begin(), hooks_.end(),
                         [&](const auto& h) { return h->slot() == slot; });
  if (it == hooks_.end()) {
    raise(ErrorCode::kUnknownSlot, "no tenant in slot " + slot);
  }
  hooks_.erase(it);
}

TickHook* DeviceModel::hook(const std::string& slot) const {
  for (const auto& h : hooks_) {
    if (h->slot() == slot) return h.get();
  }
  return nullptr;
}

void DeviceModel::slcr_write(SlcrRegister reg, word32 value) {
  switch (reg) {
    case SlcrRegister::kUnlock:
      if (value == geometry_.slcr_unlock_key) {
        slcr_locked_ = false;
        log_.emit(EffectKind::kSlcrUnlock, "slcr unlock");
      } else {
        log_.emit(EffectKind::kSlcrUnlockFailed,
                  "slcr unlock-failed " + format_word(value));
      }
      break;
    case SlcrRegister::kThrottle:
      if (slcr_locked_) {
        log_.emit(EffectKind::kThrottleIgnored, "throttle ignored-locked");
        break;
      }
      clock_running_ = value != 0;
      log_.emit(clock_running_ ? EffectKind::kThrottleStart
                               : EffectKind::kThrottleStop,
                clock_running_ ? "throttle start" : "throttle stop");
      break;
  }
}

void DeviceModel::step_clock(std::uint64_t cycles) {
  if (!clock_running_) return;
  for (std::uint64_t i = 0; i < cycles; ++i) {
    ++cycle_;
    for (const auto& h : hooks_) h->on_tick(*this);
  }
}

void DeviceModel::do_gsr() {
  std::size_t loaded = 0;
  for (CellRecord& c : cells_) {
    word32 far_word = bitcodec::far_encode(c.entry.far);
    auto it = config_mem_.find(far_word);
    if (c.entry.kind == ElementKind::kFf) {
      bool v = it != config_mem_.end() &&
               it->second.bit(c.entry.frame_word, c.entry.frame_bit);
      c.ff_value = v;
      ++loaded;
    } else if (is_word_cell(c.entry.kind)) {
      c.word_value =
          it == config_mem_.end() ? 0 : it->second[c.entry.frame_word];
      ++loaded;
    }
  }
  log_.emit(EffectKind::kGsrPulse,
            "gsr pulse cells=" + std::to_string(loaded));
}

void DeviceModel::gsr_pulse() { do_gsr(); }

std::vector<word32> DeviceModel::serve_frame(const FrameAddress& far) const {
  Frame f;
  auto it = config_mem_.find(bitcodec::far_encode(far));
  if (it != config_mem_.end()) f = it->second;
  if (!glutmask_enabled()) {
    auto cells = cells_by_far_.find(bitcodec::far_encode(far));
    if (cells != cells_by_far_.end()) {
      for (std::size_t idx : cells->second) {
        const CellRecord& c = cells_[idx];
        if (c.entry.kind == ElementKind::kLutRam) {
          f.set_bit(c.entry.frame_word, c.entry.frame_bit, false);
        }
      }
    }
  }
  if (far.block_type == BlockType::kBram) {
    for (std::size_t w = 0; w < Frame::kWordsPerFrame; ++w) {
      if (is_bram_artifact_word(w)) f.set_bit(w, kBramArtifactBit, true);
    }
  }
  f[Frame::kCrcWordIndex] = crc_reg_;
  return {f.words().begin(), f.words().end()};
}

void DeviceModel::commit_pending_readback() {
  if (!pending_fdro_count_) return;
  word32 count = *pending_fdro_count_;
  pending_fdro_count_.reset();
  if (count == 0) return;
  if (cmd_reg_ != bitcodec::kCmdRcfg) {
    raise(ErrorCode::kReadbackNotArmed, "FDRO read without RCFG");
  }
  if (count % Frame::kWordsPerFrame != 0 || count < 2 * Frame::kWordsPerFrame) {
    raise(ErrorCode::kCountMismatch,
          "readback length " + std::to_string(count) +
              " is not pad + k frames");
  }
  std::size_t n_frames = count / Frame::kWordsPerFrame - 1;
  if (port_clock_hz_ >= geometry_.freeze_port_hz && armed_before_ &&
      gap_since_last_arm_us_ < geometry_.min_interframe_gap_us) {
    log_.emit(EffectKind::kFabricFreeze, "fabric freeze");
  }
  armed_before_ = true;
  gap_since_last_arm_us_ = 0.0;

  readback_queue_.clear();
  readback_queue_.reserve(count);
  readback_queue_.insert(readback_queue_.end(), Frame::kWordsPerFrame, 0);
  FrameAddress far = bitcodec::far_decode(far_reg_);
  for (std::size_t i = 0; i < n_frames; ++i) {
    if (!geometry_.contains(far)) {
      raise(ErrorCode::kFarOutOfRange,
            "readback walks off the device at " + to_string(far));
    }
    auto words = serve_frame(far);
    readback_queue_.insert(readback_queue_.end(), words.begin(), words.end());
    if (i + 1 < n_frames) {
      auto next = geometry_.far_successor(far);
      if (!next) {
        raise(ErrorCode::kFarOutOfRange, "readback walks past the last frame");
      }
      far = *next;
    }
  }
  log_.emit(EffectKind::kReadbackArmed,
            "readback armed far=" + format_word(far_reg_) +
                " words=" + std::to_string(count));
}

std::vector<word32> DeviceModel::pcap_read(std::size_t word_count) {
  commit_pending_readback();
  if (readback_queue_.empty()) {
    if (!ever_synced_) {
      raise(ErrorCode::kNotSynced, "port never synchronised");
    }
    raise(ErrorCode::kReadbackNotArmed, "no readback pending");
  }
  if (word_count != readback_queue_.size()) {
    raise(ErrorCode::kCountMismatch,
          "requested " + std::to_string(word_count) + " words, armed " +
              std::to_string(readback_queue_.size()));
  }
  std::vector<word32> out = std::move(readback_queue_);
  readback_queue_.clear();
  log_.emit(EffectKind::kReadbackServed,
            "readback served words=" + std::to_string(out.size()));
  return out;
}

void DeviceModel::write_frame(const FrameAddress& far, const Frame& frame) {
  word32 far_word = bitcodec::far_encode(far);
  if (far.block_type == BlockType::kBram) {
    for (std::size_t w = 0; w < Frame::kWordsPerFrame; ++w) {
      if (is_bram_artifact_word(w) && frame.bit(w, kBramArtifactBit)) {
        log_.emit(EffectKind::kFrameWriteInhibited,
                  "frame write-inhibited " + format_word(far_word));
        return;
      }
    }
  }
  config_mem_[far_word] = frame;
  log_.emit(EffectKind::kFrameWrite, "frame write " + format_word(far_word));
}

void DeviceModel::execute_cmd(word32 code) {
  cmd_reg_ = code;
  switch (code) {
    case bitcodec::kCmdShutdown:
      shutdown_ = true;
      log_.emit(EffectKind::kCmd, "cmd shutdown");
      break;
    case bitcodec::kCmdRcrc:
      if (crc_pending_) {
        log_.emit(EffectKind::kCrcBypass, "crc bypass");
      }
      crc_reg_ = 0;
      crc_pending_ = false;
      log_.emit(EffectKind::kCmd, "cmd rcrc");
      break;
    case bitcodec::kCmdRcfg:
      log_.emit(EffectKind::kCmd, "cmd rcfg");
      break;
    case bitcodec::kCmdGcapture: {
      std::size_t captured = 0;
      for (const CellRecord& c : cells_) {
        if (c.entry.kind != ElementKind::kFf) continue;
        config_frame(bitcodec::far_encode(c.entry.far))
            .set_bit(c.entry.frame_word, c.entry.frame_bit, c.ff_value);
        ++captured;
      }
      log_.emit(EffectKind::kGcapture,
                "cmd gcapture cells=" + std::to_string(captured));
      break;
    }
    case bitcodec::kCmdWcfg:
      log_.emit(EffectKind::kCmd, "cmd wcfg");
      break;
    case bitcodec::kCmdStart:
      shutdown_ = false;
      log_.emit(EffectKind::kCmd, "cmd start");
      break;
    case bitcodec::kCmdGrestore:
      log_.emit(EffectKind::kCmd, "cmd grestore");
      do_gsr();
      break;
    case bitcodec::kCmdDesync:
      if (crc_pending_) {
        log_.emit(EffectKind::kCrcCheck, "crc mismatch");
        crc_pending_ = false;
        raise(ErrorCode::kCrcMismatch,
              "frame data not followed by RCRC or a matching CRC write");
      }
      synced_ = false;
      last_type1_reg_.reset();
      log_.emit(EffectKind::kDesync, "desync");
      break;
    default:
      log_.emit(EffectKind::kCmd, "cmd unknown " + format_word(code));
      break;
  }
}

void DeviceModel::apply_register_write(std::uint8_t reg,
                                       std::vector<word32> payload) {
  switch (reg) {
    case bitcodec::kRegCmd:
      execute_cmd(payload.empty() ? 0 : payload[0]);
      break;
    case bitcodec::kRegFar:
      far_reg_ = payload.empty() ? 0 : payload[0];
      log_.emit(EffectKind::kFar, "far " + format_word(far_reg_));
      break;
    case bitcodec::kRegIdcode: {
      word32 id = payload.empty() ? 0 : payload[0];
      if (id != geometry_.idcode) {
        log_.emit(EffectKind::kIgnoredWord, "idcode mismatch " + format_word(id));
        raise(ErrorCode::kIdcodeMismatch,
              "device " + format_word(geometry_.idcode) + ", stream " +
                  format_word(id));
      }
      log_.emit(EffectKind::kIdcodeOk, "idcode ok " + format_word(id));
      break;
    }
    case bitcodec::kRegMask:
      mask_ = payload.empty() ? 0 : payload[0];
      log_.emit(EffectKind::kMask, "mask " + format_word(mask_));
      break;
    case bitcodec::kRegCtl0: {
      word32 v = payload.empty() ? 0 : payload[0];
      ctl0_ = (ctl0_ & ~mask_) | (v & mask_);
      log_.emit(EffectKind::kCtl0,
                "ctl0 " + format_word(ctl0_) +
                    (glutmask_enabled() ? " glutmask=on" : " glutmask=off"));
      break;
    }
    case bitcodec::kRegCrc: {
      word32 v = payload.empty() ? 0 : payload[0];
      if (crc_hook_ && crc_hook_(v)) {
        crc_reg_ = v;
        crc_pending_ = false;
        log_.emit(EffectKind::kCrcCheck, "crc check ok");
      } else {
        log_.emit(EffectKind::kCrcCheck, "crc mismatch");
        raise(ErrorCode::kCrcMismatch,
              "explicit CRC write " + format_word(v) + " rejected");
      }
      break;
    }
    case bitcodec::kRegFdri: {
      if (cmd_reg_ != bitcodec::kCmdWcfg) {
        raise(ErrorCode::kWriteWhileNotWcfg, "frame data without WCFG");
      }
      std::size_t n = payload.size();
      if (n < 2 * Frame::kWordsPerFrame || n % Frame::kWordsPerFrame != 0) {
        raise(ErrorCode::kMissingPaddingFrame,
              "frame data length " + std::to_string(n) +
                  " is not k data frames plus one padding frame");
      }
      std::size_t k = n / Frame::kWordsPerFrame - 1;
      for (std::size_t w = n - Frame::kWordsPerFrame; w < n; ++w) {
        if (payload[w] != 0) {
          raise(ErrorCode::kMissingPaddingFrame,
                "trailing frame is not all zeros");
        }
      }
      FrameAddress far = bitcodec::far_decode(far_reg_);
      for (std::size_t i = 0; i < k; ++i) {
        if (!geometry_.contains(far)) {
          raise(ErrorCode::kFarOutOfRange,
                "frame write walks off the device at " + to_string(far));
        }
        Frame frame(std::span<const word32>(payload.data() +
                                                i * Frame::kWordsPerFrame,
                                            Frame::kWordsPerFrame));
        write_frame(far, frame);
        auto next = geometry_.far_successor(far);
        if (next) {
          far = *next;
        } else if (i + 1 < k) {
          raise(ErrorCode::kFarOutOfRange, "frame write walks past the last frame");
        }
      }
      far_reg_ = bitcodec::far_encode(far);
      crc_pending_ = true;
      log_.emit(EffectKind::kPaddingOk, "padding ok");
      break;
    }
    case bitcodec::kRegFdro:
      log_.emit(EffectKind::kIgnoredWord, "write to read-only FDRO ignored");
      break;
    default:
      log_.emit(EffectKind::kIgnoredWord,
                "write to " + bitcodec::register_name(reg) + " ignored");
      break;
  }
}

void DeviceModel::process_synced_word(word32 w) {
  if (collecting_) {
    collect_buf_.push_back(w);
    if (collect_buf_.size() == collect_count_) {
      collecting_ = false;
      apply_register_write(collect_reg_, std::move(collect_buf_));
      collect_buf_.clear();
    }
    return;
  }

  word32 type = w >> kTypeShift;
  word32 op_bits = (w >> kOpcodeShift) & 0x3;
  bool fdro_read =
      op_bits == 1 &&
      ((type == 1 &&
        ((w >> kRegisterShift) & 0x1F) == bitcodec::kRegFdro) ||
       (type == 2 && last_type1_reg_ == bitcodec::kRegFdro));
  if (!fdro_read) commit_pending_readback();

  switch (w) {
    case kDummyWord:
    case kSyncWord:
    case kBusWidthSyncWord:
    case kBusWidthDetectWord:
    case kNoopWord:
      return;
    default:
      break;
  }

  if (op_bits == 3) {
    log_.emit(EffectKind::kIgnoredWord, "ignored " + format_word(w));
    return;
  }
  auto op = static_cast<bitcodec::Opcode>(op_bits);

  if (type == 1) {
    auto reg = static_cast<std::uint8_t>((w >> kRegisterShift) & 0x1F);
    word32 count = w & 0x7FF;
    last_type1_reg_ = reg;
    switch (op) {
      case bitcodec::Opcode::kNop:
        return;
      case bitcodec::Opcode::kRead:
        if (reg == bitcodec::kRegFdro) pending_fdro_count_ = count;
        return;
      case bitcodec::Opcode::kWrite:
        if (count == 0) return;
        collecting_ = true;
        collect_reg_ = reg;
        collect_count_ = count;
        collect_buf_.clear();
        collect_buf_.reserve(std::min<word32>(count, 1u << 20));
        return;
    }
  } else if (type == 2) {
    if (!last_type1_reg_) {
      raise(ErrorCode::kOrphanType2,
            "Type2 header " + format_word(w) + " without preceding Type1");
    }
    word32 count = w & 0x07FFFFFF;
    switch (op) {
      case bitcodec::Opcode::kNop:
        return;
      case bitcodec::Opcode::kRead:
        if (*last_type1_reg_ == bitcodec::kRegFdro) pending_fdro_count_ = count;
        return;
      case bitcodec::Opcode::kWrite:
        if (count == 0) return;
        collecting_ = true;
        collect_reg_ = *last_type1_reg_;
        collect_count_ = count;
        collect_buf_.clear();
        collect_buf_.reserve(std::min<word32>(count, 1u << 20));
        return;
    }
  } else {
    log_.emit(EffectKind::kIgnoredWord, "ignored " + format_word(w));
  }
}

void DeviceModel::pcap_write(std::span<const word32> words) {
  for (word32 w : words) {
    if (!synced_) {
      if (w == kSyncWord) {
        synced_ = true;
        ever_synced_ = true;
        log_.emit(EffectKind::kSync, "sync");
      }
      continue;
    }
    process_synced_word(w);
  }
}

}  // namespace epoch::fabricsim
