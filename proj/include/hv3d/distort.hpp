// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hv3d/plane.hpp"

namespace hv3d {

enum class DistortionKind { kAwgn, kGaussianBlur, kMeanShift };

/// One synthetic distortion. `magnitude` is the noise sigma (sample units),
/// the blur sigma (pixels) or the luma offset, depending on `kind`.
struct DistortionSpec {
  DistortionKind kind = DistortionKind::kAwgn;
  double magnitude = 0.0;
  std::uint64_t seed = 0;  // awgn only

  void validate() const;
};

/// Parses `kind:magnitude[:seed]`, kind one of awgn, blur, shift
/// (e.g. "awgn:10:42", "blur:1.5", "shift:-12"). Throws ValidationError.
DistortionSpec parse_distortion_spec(std::string_view text);

std::string to_string(const DistortionSpec& spec);

/// Adds i.i.d. zero-mean Gaussian noise to Y, U and V, then clamps to [0, 255].
/// The generator is seeded from (seed, stream), so frames of one sequence can
/// draw independent noise by passing their index as `stream`.
Frame awgn(const Frame& f, double sigma, std::uint64_t seed, std::uint64_t stream = 0);

/// Separable Gaussian of radius ceil(3 sigma) on every plane, edge replication.
Frame gaussian_blur(const Frame& f, double sigma);

/// Adds `delta` to luma only, clamped to [0, 255].
Frame mean_shift(const Frame& f, double delta);

/// Applies `spec`; `stream` feeds awgn and is ignored otherwise.
Frame apply_distortion(const Frame& f, const DistortionSpec& spec, std::uint64_t stream = 0);

}  // namespace hv3d
