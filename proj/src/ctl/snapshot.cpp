// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/ctl/snapshot.hpp"

#include "epoch/error.hpp"

namespace epoch::ctl {

using bitcodec::Frame;

namespace {

constexpr std::uint8_t kMagic[4] = {'E', 'P', 'O', 'C'};

void append_be64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  append_be32(out, static_cast<word32>(v >> 32));
  append_be32(out, static_cast<word32>(v));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  word32 u32() {
    need(4);
    word32 v = read_be32(bytes_.data() + pos_);
    pos_ += 4;
    return v;
  }

  std::uint64_t u64() {
    std::uint64_t hi = u32();
    return (hi << 32) | u32();
  }

  std::string str(std::size_t len) {
    need(len);
    std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), len);
    pos_ += len;
    return s;
  }

 private:
  void need(std::size_t n) {
    if (pos_ + n > bytes_.size()) {
      raise(ErrorCode::kBadConfigFile, "snapshot blob truncated");
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize_snapshot(const Snapshot& snap) {
  std::vector<std::uint8_t> out;
  out.reserve(16 + snap.slot_id.size() + 12 +
              snap.frames.size() * (4 + Frame::kWordsPerFrame * 4));
  for (std::uint8_t b : kMagic) out.push_back(b);
  append_be32(out, kSnapshotVersion);
  append_be32(out, snap.idcode);
  append_be32(out, static_cast<word32>(snap.slot_id.size()));
  out.insert(out.end(), snap.slot_id.begin(), snap.slot_id.end());
  append_be64(out, snap.captured_at_cycle);
  append_be32(out, static_cast<word32>(snap.frames.size()));
  for (const auto& [far, frame] : snap.frames) {
    append_be32(out, bitcodec::far_encode(far));
    for (word32 w : frame.words()) append_be32(out, w);
  }
  return out;
}

Snapshot deserialize_snapshot(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  if (r.str(4) != std::string(reinterpret_cast<const char*>(kMagic), 4)) {
    raise(ErrorCode::kBadConfigFile, "snapshot magic mismatch");
  }
  word32 version = r.u32();
  if (version != kSnapshotVersion) {
    raise(ErrorCode::kBadConfigFile,
          "snapshot format version " + std::to_string(version) +
              " not supported");
  }
  Snapshot snap;
  snap.idcode = r.u32();
  word32 slot_len = r.u32();
  if (slot_len > 4096) {
    raise(ErrorCode::kBadConfigFile, "snapshot slot id length implausible");
  }
  snap.slot_id = r.str(slot_len);
  snap.captured_at_cycle = r.u64();
  word32 frame_count = r.u32();
  snap.frames.reserve(frame_count);
  std::vector<word32> buf(Frame::kWordsPerFrame);
  for (word32 i = 0; i < frame_count; ++i) {
    word32 far_word = r.u32();
    for (auto& w : buf) w = r.u32();
    snap.frames.emplace_back(bitcodec::far_decode(far_word),
                             Frame(std::span<const word32>(buf)));
  }
  return snap;
}

}  // namespace epoch::ctl
