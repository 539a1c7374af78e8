// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "hv3d/config.hpp"
#include "hv3d/plane.hpp"

namespace hv3d {

/// Every factor entering the per-frame HV3D sum.
struct FrameComponents {
  double vif_y_right = 0.0;
  double vif_u_right = 0.0;
  double vif_v_right = 0.0;
  double vif_y_left = 0.0;
  double vif_u_left = 0.0;
  double vif_v_left = 0.0;
  double vif_disparity = 0.0;  // VIF(D, D') on raw disparity
  double cyclopean = 0.0;      // mean block SSIM of the cyclopean views
  double variance = 0.0;       // reference disparity variance term S
};

/// Weighted partial sums; raw is their sum.
struct WeightedTerms {
  double luma = 0.0;       // w1 (Y_R + Y_L)
  double chroma = 0.0;     // w4 ((U_R + V_R) + (U_L + V_L))
  double cyclopean = 0.0;  // w2 VIF(D,D')^beta * cyclopean
  double variance = 0.0;   // w3 VIF(D,D')^beta * S

  double total() const { return luma + chroma + cyclopean + variance; }
};

WeightedTerms weighted_terms(const FrameComponents& c, const HV3DConfig& cfg);

struct FrameScore {
  double raw = 0.0;
  double max = 0.0;
  double normalized = 0.0;
  FrameComponents components;
};

struct SequenceScore {
  std::vector<FrameScore> per_frame;
  double mean_normalized = 0.0;

  /// Component-wise mean over frames.
  FrameComponents mean_components() const;
  double mean_raw() const;
  double mean_max() const;
};

/// Highest attainable raw score for a frame whose reference variance term is S:
/// 2 w1 + 4 w4 + w2 + w3 S.
double hv3d_max(const HV3DConfig& cfg, double variance_term);

/// raw / max; throws ValidationError when max <= 0.
double hv3d_normalize(double raw, double max);

/// Computes every component for one frame pair.
FrameComponents hv3d_components(const StereoFrame& ref, const StereoFrame& dist,
                                const HV3DConfig& cfg);

FrameScore hv3d_frame(const StereoFrame& ref, const StereoFrame& dist, const HV3DConfig& cfg);

/// Scores frame pairs independently (up to `threads` at once; 0 = all cores)
/// and averages the normalized scores in frame order.
SequenceScore hv3d_sequence(std::span<const StereoFrame> ref, std::span<const StereoFrame> dist,
                            const HV3DConfig& cfg, unsigned threads = 0);

/// Builds a SequenceScore from finished frames.
SequenceScore summarize(std::vector<FrameScore> frames);

}  // namespace hv3d
