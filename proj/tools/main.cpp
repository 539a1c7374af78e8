// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "hv3d/cli.hpp"

int main(int argc, char** argv) {
  return hv3d::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
