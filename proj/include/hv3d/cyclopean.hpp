// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hv3d/block4.hpp"
#include "hv3d/csf.hpp"
#include "hv3d/plane.hpp"
#include "hv3d/ssim.hpp"

namespace hv3d {

struct PixelPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const PixelPoint&, const PixelPoint&) = default;
};

/// Correspondence between a left-view 4x4 block and its right-view partner.
struct BlockMatch {
  PixelPoint left_origin;
  PixelPoint right_origin;   // same row as left_origin
  int disparity_used = 0;    // left_origin.x - right_origin.x
  double sad = 0.0;
};

/// Horizontal search half-width around the disparity-predicted position:
/// a 28 px range minus the 4 px block, split evenly.
inline constexpr int kMatchSearchRadius = 12;

/// Median of the 16 disparity samples of a 4x4 block (mean of the middle pair).
double block_median_disparity(const Plane& disparity, PixelPoint origin);

/// Finds the right-view block for the left-view block at `left_origin`.
///
/// Starts at x - round(median disparity), then refines by minimum SAD over
/// offsets in [-12, 12]. Ties prefer the smallest |offset|, then the negative
/// one. Every candidate is clamped so the block stays inside the right view.
BlockMatch match_block(const Plane& left_y, const Plane& right_y, const Plane& disparity,
                       PixelPoint left_origin);

/// Cyclopean model of one matched pair: CSF-weighted view-DC slice brought
/// back to the pixel domain.
Block4 cyclopean_block(const Block4& left, const Block4& right, const CsfMask& mask);

/// Per-block SSIM between reference and distorted cyclopean views, laid out
/// on the floor(W/4) x floor(H/4) left-view grid.
Plane cyclopean_quality_map(const StereoFrame& ref, const StereoFrame& dist, const CsfMask& mask,
                            const SsimConstants& c = {});

/// Arithmetic mean of cyclopean_quality_map.
double cyclopean_quality(const StereoFrame& ref, const StereoFrame& dist, const CsfMask& mask,
                         const SsimConstants& c = {});

}  // namespace hv3d
