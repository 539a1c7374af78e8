// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>

#include "hv3d/plane.hpp"

namespace hv3d {

/// Fixed 4x4 real grid, row-major. Used for pixel blocks and their DCT coefficients.
struct Block4 {
  static constexpr int kSize = 4;
  std::array<double, 16> v{};

  double operator()(int row, int col) const { return v[static_cast<std::size_t>(row * 4 + col)]; }
  double& operator()(int row, int col) { return v[static_cast<std::size_t>(row * 4 + col)]; }

  static Block4 filled(double value) {
    Block4 b;
    b.v.fill(value);
    return b;
  }

  friend bool operator==(const Block4&, const Block4&) = default;
};

/// Reads a 4x4 block with the same clamp-to-edge rule as block_at.
Block4 block4_at(const Plane& plane, int x0, int y0);

/// Throws DimensionError unless `p` is 4x4.
Block4 to_block4(const Plane& p);

}  // namespace hv3d
