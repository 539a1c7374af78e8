// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace hv3d {

/// Viewing setup that sets how many pixels fall inside the fovea.
struct DisplayGeometry {
  double viewing_distance_mm = 300.0;
  double vertical_resolution_px = 480.0;
  double display_height_mm = 68.0;
  double half_angle_deg = 0.375;  // half of the 0.75 degree acuity cone

  /// Throws ValidationError unless all fields are positive and 2*alpha is in [0.5, 2] degrees.
  void validate() const;
};

/// Side of the on-screen square seen by the fovea, in pixels, unrounded:
/// 2 d h tan(alpha) / H.
double fovea_block_length_px(const DisplayGeometry& g);

/// fovea_block_length_px rounded to the nearest integer.
int fovea_block_size(const DisplayGeometry& g);

}  // namespace hv3d
