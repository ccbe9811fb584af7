// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace epoch::cli {

// Entry point shared by the binary and the in-process CLI tests. args holds
// the command line without the program name. Returns the process exit code:
// 0 on success, 1 on scenario/assertion/data failures, 2 on usage and file
// parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace epoch::cli
