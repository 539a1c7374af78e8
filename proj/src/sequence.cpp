// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/sequence.hpp"

#include "hv3d/disparity.hpp"
#include "hv3d/error.hpp"
#include "hv3d/parallel.hpp"
#include "hv3d/pgm_io.hpp"

namespace hv3d {

StereoFrame load_stereo_frame(const SequenceSpec& spec, int index, int max_disparity) {
  spec.validate();
  StereoFrame f;
  f.left = read_yuv420_frame(spec.left, spec.width, spec.height, index);
  f.right = read_yuv420_frame(spec.right, spec.width, spec.height, index);
  if (spec.disparity_mode == DisparityMode::kSupplied) {
    f.disparity = load_disparity_pgm(disparity_path_for_frame(spec.disparity, index));
  } else {
    f.disparity = estimate_disparity(f.left.y, f.right.y, max_disparity);
  }
  f.validate();
  return f;
}

std::vector<StereoFrame> load_stereo_sequence(const SequenceSpec& spec, int max_disparity) {
  spec.validate();
  std::vector<StereoFrame> out;
  out.reserve(static_cast<std::size_t>(spec.frame_count));
  for (int i = 0; i < spec.frame_count; ++i) out.push_back(load_stereo_frame(spec, i, max_disparity));
  return out;
}

SequenceScore score_sequence_files(const SequenceSpec& ref, const SequenceSpec& dist,
                                   const HV3DConfig& cfg, unsigned threads) {
  ref.validate();
  dist.validate();
  cfg.validate();
  if (ref.frame_count != dist.frame_count) {
    throw DimensionError("frame count mismatch: reference " + std::to_string(ref.frame_count) +
                         ", distorted " + std::to_string(dist.frame_count));
  }
  if (ref.width != dist.width || ref.height != dist.height) {
    throw DimensionError("reference and distorted sequences differ in size");
  }
  std::vector<FrameScore> frames(static_cast<std::size_t>(ref.frame_count));
  parallel_for(frames.size(), threads, [&](std::size_t i) {
    const int index = static_cast<int>(i);
    const StereoFrame r = load_stereo_frame(ref, index, cfg.max_disparity);
    const StereoFrame d = load_stereo_frame(dist, index, cfg.max_disparity);
    frames[i] = hv3d_frame(r, d, cfg);
  });
  return summarize(std::move(frames));
}

}  // namespace hv3d
