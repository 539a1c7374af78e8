// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "hv3d/block4.hpp"

namespace hv3d {

/// Standard JPEG luminance quantization table (row-major, 8x8).
extern const std::array<int, 64> kJpegLuminanceQuant;

/// The JPEG table averaged over 2x2 quads.
Block4 downsampled_jpeg_table();

/// 4x4 contrast sensitivity weights over DCT frequencies.
///
/// Entries are reciprocals of the downsampled JPEG table scaled to mean 1,
/// so low frequencies weigh more and a uniform distortion keeps its average.
struct CsfMask {
  Block4 coefficients;
};

CsfMask build_csf_mask();

/// Element-wise product of the coefficient grid with the mask.
Block4 apply_csf(const Block4& raw, const CsfMask& mask);

}  // namespace hv3d
