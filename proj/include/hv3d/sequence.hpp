// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hv3d/config.hpp"
#include "hv3d/hv3d.hpp"
#include "hv3d/yuv_io.hpp"

namespace hv3d {

/// Loads frame `index` of a stereo sequence and its disparity map: from the
/// PGM template when supplied, otherwise estimated from the luma pair.
StereoFrame load_stereo_frame(const SequenceSpec& spec, int index, int max_disparity);

std::vector<StereoFrame> load_stereo_sequence(const SequenceSpec& spec, int max_disparity);

/// Scores two on-disk sequences frame by frame without holding them in memory.
SequenceScore score_sequence_files(const SequenceSpec& ref, const SequenceSpec& dist,
                                   const HV3DConfig& cfg, unsigned threads = 0);

}  // namespace hv3d
