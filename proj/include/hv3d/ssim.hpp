// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hv3d/block4.hpp"
#include "hv3d/plane.hpp"

namespace hv3d {

struct SsimConstants {
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;

  double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
  double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }
};

/// SSIM over one window spanning the whole 4x4 block, with unbiased (n-1)
/// variance and covariance. Symmetric in its arguments; 1 iff a == b.
double ssim_block(const Block4& a, const Block4& b, const SsimConstants& c = {});

/// Plane overload; throws DimensionError unless both are 4x4.
double ssim_block(const Plane& a, const Plane& b, const SsimConstants& c = {});

}  // namespace hv3d
