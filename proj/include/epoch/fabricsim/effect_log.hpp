// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace epoch::fabricsim {

// Side effects observable at the configuration and control interfaces. The
// text line vocabulary is stable; reports and golden traces depend on it.
enum class EffectKind : std::uint8_t {
  kSync,
  kDesync,
  kCmd,
  kIdcodeOk,
  kMask,
  kCtl0,
  kFar,
  kFrameWrite,
  kFrameWriteInhibited,
  kPaddingOk,
  kReadbackArmed,
  kReadbackServed,
  kCrcBypass,
  kCrcCheck,
  kSlcrUnlock,
  kSlcrUnlockFailed,
  kThrottleStop,
  kThrottleStart,
  kThrottleIgnored,
  kGsrPulse,
  kGcapture,
  kFabricFreeze,
  kBramWrite,
  kDspWrite,
  kIgnoredWord,
};

struct Effect {
  EffectKind kind;
  std::string line;  // formatted at emit time, stable vocabulary
};

class EffectLog {
 public:
  void emit(EffectKind kind, std::string line) {
    entries_.push_back({kind, std::move(line)});
  }

  const std::vector<Effect>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  void clear() { entries_.clear(); }

  std::size_t count(EffectKind kind) const;
  bool contains(EffectKind kind) const { return count(kind) > 0; }

  // One line per effect, newline-terminated.
  std::string to_text() const;

  // Entries appended since an earlier size() observation.
  std::vector<Effect> since(std::size_t old_size) const;

 private:
  std::vector<Effect> entries_;
};

}  // namespace epoch::fabricsim
