// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "hv3d/plane.hpp"

namespace hv3d {

/// Sampled Gaussian exp(-x^2 / 2 sigma^2) for x in [-radius, radius], normalized to sum 1.
/// sigma == 0 or radius == 0 yields the single tap {1}.
std::vector<double> gaussian_taps(double sigma, int radius);

/// Separable convolution (rows, then columns) with clamp-to-edge replication.
/// `taps` must have odd length; the output has the input's shape.
Plane convolve_separable(const Plane& plane, std::span<const double> taps);

/// Keep every other sample in each axis starting at (0, 0): ceil(w/2) x ceil(h/2).
Plane decimate2(const Plane& plane);

/// Pointwise product of two equal-shape planes.
Plane multiply(const Plane& a, const Plane& b);

}  // namespace hv3d
