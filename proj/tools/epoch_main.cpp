// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "epoch/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return epoch::cli::run_cli(args, std::cout, std::cerr);
}
