// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hv3d/block4.hpp"

namespace hv3d {

/// Orthonormal 2D DCT-II of a 4x4 block (rows then columns).
Block4 dct4(const Block4& pixels);

/// Orthonormal inverse of dct4.
Block4 idct4(const Block4& coeffs);

/// The two view-axis slices of a 4x4x2 DCT over a left/right block pair.
struct FusedPair {
  Block4 low;   // (dct4(L) + dct4(R)) / sqrt(2): the view-axis DC slice
  Block4 high;  // (dct4(L) - dct4(R)) / sqrt(2)
};

FusedPair fuse_blocks_full(const Block4& left, const Block4& right);

/// View-axis DC slice only; the difference slice is discarded.
Block4 fuse_blocks(const Block4& left, const Block4& right);

}  // namespace hv3d
