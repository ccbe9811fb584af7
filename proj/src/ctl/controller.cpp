// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/ctl/controller.hpp"

#include "epoch/ctl/sequences.hpp"
#include "epoch/error.hpp"

namespace epoch::ctl {

using bitcodec::BlockType;
using bitcodec::Frame;
using bitcodec::FrameAddress;
using fabricsim::DeviceModel;
using fabricsim::SlcrRegister;

void clock_stop(DeviceModel& dev) {
  dev.slcr_write(SlcrRegister::kUnlock, dev.geometry().slcr_unlock_key);
  dev.slcr_write(SlcrRegister::kThrottle, 0);
}

void clock_start(DeviceModel& dev) {
  dev.slcr_write(SlcrRegister::kUnlock, dev.geometry().slcr_unlock_key);
  dev.slcr_write(SlcrRegister::kThrottle, 1);
}

Snapshot context_save(DeviceModel& dev, const std::string& slot,
                      DramStore& store, const ControllerOptions& options) {
  std::vector<FrameAddress> fars = dev.slot_frames(slot);
  if (fars.empty()) {
    raise(ErrorCode::kUnknownSlot, "slot " + slot + " maps no cells");
  }
  store.region(slot);  // fail before touching the device

  clock_stop(dev);
  Snapshot snap;
  snap.slot_id = slot;
  snap.idcode = dev.geometry().idcode;
  snap.captured_at_cycle = dev.cycle();
  snap.fixup_applied = options.bram_fixup;
  snap.frames.reserve(fars.size());
  for (std::size_t i = 0; i < fars.size(); ++i) {
    if (i > 0) dev.note_interframe_gap_us(options.timing.interframe_gap_us);
    dev.pcap_write(build_readback_sequence(fars[i], 1, options.glut_unmask,
                                           options.capture_ffs));
    std::vector<word32> words = dev.pcap_read(2 * Frame::kWordsPerFrame);
    Frame frame(std::span<const word32>(words.data() + Frame::kWordsPerFrame,
                                        Frame::kWordsPerFrame));
    if (options.bram_fixup && fars[i].block_type == BlockType::kBram) {
      frame = apply_bram_fixup(fars[i], frame);
    }
    snap.frames.emplace_back(fars[i], frame);
  }
  store.write_blob(slot, serialize_snapshot(snap));
  clock_start(dev);
  return snap;
}

Snapshot load_snapshot(const DramStore& store, const std::string& slot) {
  return deserialize_snapshot(store.blob(slot));
}

void context_restore(DeviceModel& dev, const Snapshot& snapshot,
                     const DramStore& store, const ControllerOptions& options) {
  if (snapshot.idcode != dev.geometry().idcode) {
    raise(ErrorCode::kIdcodeMismatch,
          "snapshot for " + format_word(snapshot.idcode) + ", device is " +
              format_word(dev.geometry().idcode));
  }
  Snapshot stored = load_snapshot(store, snapshot.slot_id);
  if (stored.idcode != dev.geometry().idcode) {
    raise(ErrorCode::kIdcodeMismatch,
          "stored snapshot for " + format_word(stored.idcode) +
              ", device is " + format_word(dev.geometry().idcode));
  }

  clock_stop(dev);
  word32 idcode = dev.geometry().idcode;
  if (options.blank_before_restore) {
    for (const auto& [far, frame] : stored.frames) {
      std::vector<Frame> zero(1);
      dev.pcap_write(build_write_sequence(far, zero, far, idcode));
    }
  }
  for (std::size_t i = 0; i < stored.frames.size(); ++i) {
    const auto& [far, frame] = stored.frames[i];
    const FrameAddress& next =
        i + 1 < stored.frames.size() ? stored.frames[i + 1].first : far;
    std::vector<Frame> one{frame};
    dev.pcap_write(build_write_sequence(far, one, next, idcode));
  }
  if (!options.skip_gsr) dev.gsr_pulse();
  clock_start(dev);
}

void blank_slot(DeviceModel& dev, const std::string& slot,
                const ControllerOptions& options) {
  std::vector<FrameAddress> fars = dev.slot_frames(slot);
  if (fars.empty()) {
    raise(ErrorCode::kUnknownSlot, "slot " + slot + " maps no cells");
  }
  clock_stop(dev);
  word32 idcode = dev.geometry().idcode;
  for (const FrameAddress& far : fars) {
    std::vector<Frame> zero(1);
    dev.pcap_write(build_write_sequence(far, zero, far, idcode));
  }
  if (!options.skip_gsr) dev.gsr_pulse();
  clock_start(dev);
}

std::vector<FrameDiff> diff_snapshots(const Snapshot& a, const Snapshot& b,
                                      bool include_crc_slot) {
  if (a.frames.size() != b.frames.size()) {
    raise(ErrorCode::kGeometryMismatch,
          "snapshots cover " + std::to_string(a.frames.size()) + " and " +
              std::to_string(b.frames.size()) + " frames");
  }
  std::vector<FrameDiff> out;
  for (std::size_t i = 0; i < a.frames.size(); ++i) {
    if (a.frames[i].first != b.frames[i].first) {
      raise(ErrorCode::kGeometryMismatch,
            "snapshots cover different frame addresses");
    }
    for (std::size_t w = 0; w < Frame::kWordsPerFrame; ++w) {
      if (!include_crc_slot && w == Frame::kCrcWordIndex) continue;
      word32 before = a.frames[i].second[w];
      word32 after = b.frames[i].second[w];
      if (before != after) {
        out.push_back(FrameDiff{a.frames[i].first,
                                static_cast<std::uint8_t>(w), before, after});
      }
    }
  }
  return out;
}

}  // namespace epoch::ctl
