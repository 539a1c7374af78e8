// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/hv3d.hpp"

#include <cmath>
#include <string>

#include "hv3d/csf.hpp"
#include "hv3d/cyclopean.hpp"
#include "hv3d/disparity.hpp"
#include "hv3d/error.hpp"
#include "hv3d/parallel.hpp"
#include "hv3d/vif.hpp"

namespace hv3d {
namespace {

const CsfMask& default_mask() {
  static const CsfMask mask = build_csf_mask();
  return mask;
}

}  // namespace

WeightedTerms weighted_terms(const FrameComponents& c, const HV3DConfig& cfg) {
  const double depth_scale = std::pow(c.vif_disparity, cfg.beta);
  WeightedTerms t;
  t.luma = cfg.w1 * (c.vif_y_right + c.vif_y_left);
  t.chroma = cfg.w4 * ((c.vif_u_right + c.vif_v_right) + (c.vif_u_left + c.vif_v_left));
  t.cyclopean = cfg.w2 * depth_scale * c.cyclopean;
  t.variance = cfg.w3 * depth_scale * c.variance;
  return t;
}

FrameComponents SequenceScore::mean_components() const {
  FrameComponents m;
  if (per_frame.empty()) return m;
  for (const FrameScore& f : per_frame) {
    const FrameComponents& c = f.components;
    m.vif_y_right += c.vif_y_right;
    m.vif_u_right += c.vif_u_right;
    m.vif_v_right += c.vif_v_right;
    m.vif_y_left += c.vif_y_left;
    m.vif_u_left += c.vif_u_left;
    m.vif_v_left += c.vif_v_left;
    m.vif_disparity += c.vif_disparity;
    m.cyclopean += c.cyclopean;
    m.variance += c.variance;
  }
  const double n = static_cast<double>(per_frame.size());
  for (double* v : {&m.vif_y_right, &m.vif_u_right, &m.vif_v_right, &m.vif_y_left, &m.vif_u_left,
                    &m.vif_v_left, &m.vif_disparity, &m.cyclopean, &m.variance}) {
    *v /= n;
  }
  return m;
}

double SequenceScore::mean_raw() const {
  double total = 0.0;
  for (const FrameScore& f : per_frame) total += f.raw;
  return per_frame.empty() ? 0.0 : total / static_cast<double>(per_frame.size());
}

double SequenceScore::mean_max() const {
  double total = 0.0;
  for (const FrameScore& f : per_frame) total += f.max;
  return per_frame.empty() ? 0.0 : total / static_cast<double>(per_frame.size());
}

double hv3d_max(const HV3DConfig& cfg, double variance_term) {
  return 2.0 * cfg.w1 + 4.0 * cfg.w4 + cfg.w2 + cfg.w3 * variance_term;
}

double hv3d_normalize(double raw, double max) {
  if (!(max > 0.0)) {
    throw ValidationError("cannot normalize: maximum score is " + std::to_string(max) +
                          " (are all weights zero?)");
  }
  return raw / max;
}

FrameComponents hv3d_components(const StereoFrame& ref, const StereoFrame& dist,
                                const HV3DConfig& cfg) {
  require_same_geometry(ref, dist);
  const VifParams& vp = cfg.vif;
  FrameComponents c;
  c.vif_y_right = vif(ref.right.y, dist.right.y, vp);
  c.vif_u_right = vif(ref.right.u, dist.right.u, vp);
  c.vif_v_right = vif(ref.right.v, dist.right.v, vp);
  c.vif_y_left = vif(ref.left.y, dist.left.y, vp);
  c.vif_u_left = vif(ref.left.u, dist.left.u, vp);
  c.vif_v_left = vif(ref.left.v, dist.left.v, vp);
  c.vif_disparity = vif(ref.disparity, dist.disparity, vp);
  c.cyclopean = cyclopean_quality(ref, dist, default_mask());
  c.variance = variance_term(normalize_disparity(ref.disparity), cfg.window);
  return c;
}

FrameScore hv3d_frame(const StereoFrame& ref, const StereoFrame& dist, const HV3DConfig& cfg) {
  cfg.validate();
  FrameScore s;
  s.components = hv3d_components(ref, dist, cfg);
  s.raw = weighted_terms(s.components, cfg).total();
  s.max = hv3d_max(cfg, s.components.variance);
  s.normalized = hv3d_normalize(s.raw, s.max);
  return s;
}

SequenceScore summarize(std::vector<FrameScore> frames) {
  SequenceScore out;
  out.per_frame = std::move(frames);
  double total = 0.0;
  for (const FrameScore& f : out.per_frame) total += f.normalized;
  out.mean_normalized = out.per_frame.empty() ? 0.0 : total / static_cast<double>(out.per_frame.size());
  return out;
}

SequenceScore hv3d_sequence(std::span<const StereoFrame> ref, std::span<const StereoFrame> dist,
                            const HV3DConfig& cfg, unsigned threads) {
  if (ref.size() != dist.size()) {
    throw DimensionError("frame count mismatch: reference " + std::to_string(ref.size()) +
                         ", distorted " + std::to_string(dist.size()));
  }
  if (ref.empty()) throw ValidationError("sequences must contain at least one frame");
  cfg.validate();
  std::vector<FrameScore> frames(ref.size());
  parallel_for(ref.size(), threads, [&](std::size_t i) { frames[i] = hv3d_frame(ref[i], dist[i], cfg); });
  return summarize(std::move(frames));
}

}  // namespace hv3d
