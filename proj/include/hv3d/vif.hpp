// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hv3d/plane.hpp"

namespace hv3d {

struct VifParams {
  int scale_count = 4;
  double noise_variance = 2.0;  // sigma_n^2 of the visual noise channel
  double epsilon = 1e-10;
  int window = 11;
  double window_sigma = 1.5;

  void validate() const;
};

/// Number of scales actually used for a plane: scale_count reduced until
/// min(width, height) >= 2^scales, never below 1.
int effective_scale_count(const Plane& plane, const VifParams& p);

/// Pixel-domain multi-scale VIF, unclamped.
///
/// Local statistics come from a Gaussian window at every scale; scales after
/// the first are blurred with the same window and decimated by two.
/// Degenerate inputs: a constant reference yields 1 when the distorted plane
/// is constant too and 0 otherwise.
double vif_ratio(const Plane& ref, const Plane& dist, const VifParams& p = {});

/// vif_ratio clamped to [0, 1], the form that enters the HV3D sum.
double vif(const Plane& ref, const Plane& dist, const VifParams& p = {});

}  // namespace hv3d
