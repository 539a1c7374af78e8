// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fixtures.hpp"
#include "hv3d/config.hpp"
#include "hv3d/disparity.hpp"
#include "hv3d/distort.hpp"
#include "hv3d/hv3d.hpp"

namespace hv3d::testing {

// Distorts both views of every frame. Disparity for both clips is estimated
// from their own views, as an external tool would do for decoded content.
inline std::vector<StereoFrame> distort_clip(const std::vector<StereoFrame>& clip,
                                             const DistortionSpec& spec, int max_disp) {
  std::vector<StereoFrame> out;
  for (std::size_t i = 0; i < clip.size(); ++i) {
    StereoFrame s;
    s.left = apply_distortion(clip[i].left, spec, 2 * i);
    s.right = apply_distortion(clip[i].right, spec, 2 * i + 1);
    s.disparity = estimate_disparity(s.left.y, s.right.y, max_disp);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<StereoFrame> with_estimated_disparity(std::vector<StereoFrame> clip, int max_disp) {
  for (StereoFrame& s : clip) s.disparity = estimate_disparity(s.left.y, s.right.y, max_disp);
  return clip;
}

inline std::vector<double> ladder_scores(DistortionKind kind, const std::vector<double>& magnitudes,
                                         int width, int height, int frames) {
  const HV3DConfig cfg;
  const auto ref = with_estimated_disparity(stereo_clip(width, height, frames, 7), cfg.max_disparity);
  std::vector<double> scores;
  for (double m : magnitudes) {
    DistortionSpec spec{kind, m, 42};
    const auto dist = distort_clip(ref, spec, cfg.max_disparity);
    scores.push_back(hv3d_sequence(ref, dist, cfg).mean_normalized);
  }
  return scores;
}

}  // namespace hv3d::testing
