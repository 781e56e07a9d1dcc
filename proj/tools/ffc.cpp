// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  return ffc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
