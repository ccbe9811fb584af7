// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "epoch/bitcodec/frame.hpp"
#include "epoch/bitcodec/frame_address.hpp"
#include "epoch/words.hpp"

namespace epoch::ctl {

// Saved context of one slot. Frames are kept in canonical address order.
// fixup_applied is bookkeeping for the producing save call; it is not part
// of the serialised form because restore behaviour depends only on frame
// content.
struct Snapshot {
  std::string slot_id;
  word32 idcode = 0;
  std::uint64_t captured_at_cycle = 0;
  std::vector<std::pair<bitcodec::FrameAddress, bitcodec::Frame>> frames;
  bool fixup_applied = false;

  bool operator==(const Snapshot& o) const {
    return slot_id == o.slot_id && idcode == o.idcode &&
           captured_at_cycle == o.captured_at_cycle && frames == o.frames;
  }
};

// Binary layout, all integers big-endian:
//   bytes 0..3   magic 'E' 'P' 'O' 'C'
//   bytes 4..7   format version (1)
//   bytes 8..11  idcode
//   bytes 12..15 slot id length L
//   L bytes      slot id
//   8 bytes      captured_at_cycle
//   4 bytes      frame count F
//   F records    4-byte frame address word + 101 4-byte frame words
inline constexpr std::uint32_t kSnapshotVersion = 1;

std::vector<std::uint8_t> serialize_snapshot(const Snapshot& snap);

// Ignores trailing bytes past the last frame record (blobs live in fixed-size
// regions). Throws BadConfigFile on bad magic, version or truncation.
Snapshot deserialize_snapshot(std::span<const std::uint8_t> bytes);

}  // namespace epoch::ctl
