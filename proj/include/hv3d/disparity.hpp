// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hv3d/plane.hpp"

namespace hv3d {

/// Disparity map divided by its own frame maximum.
struct NormalizedDisparity {
  Plane plane;              // values in [0, 1]
  double source_max = 0.0;  // 0 means the input was all zero
};

NormalizedDisparity normalize_disparity(const Plane& disparity);

/// Default outer window around each 4x4 block (the foveal footprint).
inline constexpr int kDefaultVarianceWindow = 28;

/// Number of 4x4 blocks on the left-view grid: floor(W/4) * floor(H/4).
int block_count(const Plane& plane);

/// Unbiased variance of the window x window region centred on block i
/// (row-major block index). The window's top-left corner sits
/// (window - 4) / 2 pixels up and left of the block; outside samples
/// replicate the nearest edge.
double block_disparity_variance(const NormalizedDisparity& nd, int block_index,
                                int window = kDefaultVarianceWindow);

/// Local disparity variance for every block.
struct VarianceField {
  Plane sigma2;  // floor(W/4) x floor(H/4)
  double max_sigma2 = 0.0;
};

VarianceField variance_field(const NormalizedDisparity& nd, int window = kDefaultVarianceWindow);

/// sum(sigma2) / (N * max sigma2), or 0 when every block variance is 0.
double variance_term(const VarianceField& field);
double variance_term(const NormalizedDisparity& nd, int window = kDefaultVarianceWindow);

inline constexpr int kEstimatorBlock = 8;

/// Integer block-SAD disparity estimate.
///
/// For each 8x8 tile of the left view (edge tiles may be smaller), picks
/// d in [0, max_disp] minimising SAD against the right view at x - d, with
/// clamp-to-edge reads; ties take the smallest d. Every pixel of the tile
/// receives that d.
Plane estimate_disparity(const Plane& left_y, const Plane& right_y, int max_disp);

}  // namespace hv3d
