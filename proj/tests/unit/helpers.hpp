// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "epoch/error.hpp"

namespace epoch::test {

inline std::string read_fixture(const std::string& name) {
  std::string path = std::string(EPOCH_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs f and reports the ErrorCode it raised, nullopt when it returned.
template <typename F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace epoch::test
