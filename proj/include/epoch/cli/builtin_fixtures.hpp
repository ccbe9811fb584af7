// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace epoch::cli {

// Built-in demo device and scenarios, used when no --geometry/--cellmap is
// given. Byte-identical copies live under tests/fixtures/; a unit test keeps
// the two in sync.
extern const char* const kDemoGeometryText;
extern const char* const kDemoCellMapText;
extern const char* const kDemoCountersScript;
extern const char* const kDemoBramScript;

}  // namespace epoch::cli
