// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/fovea.hpp"

#include <cmath>
#include <numbers>

#include "hv3d/error.hpp"

namespace hv3d {

void DisplayGeometry::validate() const {
  if (!(viewing_distance_mm > 0.0) || !(vertical_resolution_px > 0.0) || !(display_height_mm > 0.0) ||
      !(half_angle_deg > 0.0)) {
    throw ValidationError("display geometry values must all be positive");
  }
  const double full = 2.0 * half_angle_deg;
  if (full < 0.5 || full > 2.0) {
    throw ValidationError("foveal angle 2*alpha must lie in [0.5, 2] degrees, got " +
                          std::to_string(full));
  }
}

double fovea_block_length_px(const DisplayGeometry& g) {
  const double alpha = g.half_angle_deg * std::numbers::pi / 180.0;
  const double on_screen_mm = 2.0 * g.viewing_distance_mm * std::tan(alpha);
  return g.vertical_resolution_px * on_screen_mm / g.display_height_mm;
}

int fovea_block_size(const DisplayGeometry& g) {
  return static_cast<int>(std::lround(fovea_block_length_px(g)));
}

}  // namespace hv3d
