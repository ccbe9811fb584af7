// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/fabricsim/effect_log.hpp"

#include <sstream>

namespace epoch::fabricsim {

std::size_t EffectLog::count(EffectKind kind) const {
  std::size_t n = 0;
  for (const auto& e : entries_) {
    if (e.kind == kind) ++n;
  }
  return n;
}

std::string EffectLog::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries_) os << e.line << "\n";
  return os.str();
}

std::vector<Effect> EffectLog::since(std::size_t old_size) const {
  if (old_size >= entries_.size()) return {};
  return {entries_.begin() + static_cast<std::ptrdiff_t>(old_size),
          entries_.end()};
}

}  // namespace epoch::fabricsim
