// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/distort.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <span>

#include "hv3d/error.hpp"
#include "hv3d/filter.hpp"
#include "hv3d/report.hpp"

namespace hv3d {
namespace {

constexpr double kMaxBlurSigma = 10.0;
constexpr double kMaxShift = 128.0;

void add_noise(Plane& p, std::normal_distribution<double>& dist, std::mt19937_64& rng) {
  for (double& v : p.samples()) v = std::clamp(v + dist(rng), 0.0, 255.0);
}

// A normalized non-negative kernel cannot leave the input range; the clamp
// removes last-ulp rounding excursions so that invariant holds exactly.
Plane blur_plane(const Plane& p, std::span<const double> taps) {
  const auto [lo, hi] = std::minmax_element(p.samples().begin(), p.samples().end());
  Plane out = convolve_separable(p, taps);
  for (double& v : out.samples()) v = std::clamp(v, *lo, *hi);
  return out;
}

}  // namespace

void DistortionSpec::validate() const {
  if (!std::isfinite(magnitude)) throw ValidationError("distortion magnitude must be finite");
  switch (kind) {
    case DistortionKind::kAwgn:
      if (magnitude < 0.0) throw ValidationError("awgn sigma must be >= 0");
      break;
    case DistortionKind::kGaussianBlur:
      if (magnitude < 0.0 || magnitude > kMaxBlurSigma) {
        throw ValidationError("blur sigma must be in [0, 10]");
      }
      break;
    case DistortionKind::kMeanShift:
      if (std::fabs(magnitude) > kMaxShift) throw ValidationError("shift must satisfy |delta| <= 128");
      break;
  }
}

DistortionSpec parse_distortion_spec(std::string_view text) {
  auto fail = [&](const std::string& why) -> ValidationError {
    return ValidationError("bad distortion spec '" + std::string(text) + "': " + why);
  };
  const auto first = text.find(':');
  if (first == std::string_view::npos) throw fail("expected kind:magnitude[:seed]");
  const std::string_view kind = text.substr(0, first);
  std::string_view rest = text.substr(first + 1);
  std::string_view seed_text;
  if (const auto second = rest.find(':'); second != std::string_view::npos) {
    seed_text = rest.substr(second + 1);
    rest = rest.substr(0, second);
  }

  DistortionSpec spec;
  if (kind == "awgn") spec.kind = DistortionKind::kAwgn;
  else if (kind == "blur") spec.kind = DistortionKind::kGaussianBlur;
  else if (kind == "shift") spec.kind = DistortionKind::kMeanShift;
  else throw fail("unknown kind '" + std::string(kind) + "'");

  const char* end = rest.data() + rest.size();
  auto [ptr, ec] = std::from_chars(rest.data(), end, spec.magnitude);
  if (rest.empty() || ec != std::errc{} || ptr != end) throw fail("magnitude is not a number");

  if (!seed_text.empty() || text.substr(first + 1).find(':') != std::string_view::npos) {
    if (spec.kind != DistortionKind::kAwgn) throw fail("only awgn takes a seed");
    const char* seed_end = seed_text.data() + seed_text.size();
    auto [sp, sec] = std::from_chars(seed_text.data(), seed_end, spec.seed);
    if (seed_text.empty() || sec != std::errc{} || sp != seed_end) throw fail("seed is not an unsigned integer");
  }
  spec.validate();
  return spec;
}

std::string to_string(const DistortionSpec& spec) {
  switch (spec.kind) {
    case DistortionKind::kAwgn:
      return "awgn:" + format_double(spec.magnitude) + ":" + std::to_string(spec.seed);
    case DistortionKind::kGaussianBlur:
      return "blur:" + format_double(spec.magnitude);
    case DistortionKind::kMeanShift:
      return "shift:" + format_double(spec.magnitude);
  }
  return {};
}

Frame awgn(const Frame& f, double sigma, std::uint64_t seed, std::uint64_t stream) {
  if (!(sigma >= 0.0)) throw ValidationError("awgn sigma must be >= 0");
  if (sigma == 0.0) return f;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> noise(0.0, sigma);
  Frame out = f;
  add_noise(out.y, noise, rng);
  add_noise(out.u, noise, rng);
  add_noise(out.v, noise, rng);
  return out;
}

Frame gaussian_blur(const Frame& f, double sigma) {
  if (!(sigma >= 0.0)) throw ValidationError("blur sigma must be >= 0");
  if (sigma == 0.0) return f;
  const auto taps = gaussian_taps(sigma, static_cast<int>(std::ceil(3.0 * sigma)));
  return Frame{blur_plane(f.y, taps), blur_plane(f.u, taps), blur_plane(f.v, taps)};
}

Frame mean_shift(const Frame& f, double delta) {
  if (std::fabs(delta) > kMaxShift) throw ValidationError("shift must satisfy |delta| <= 128");
  if (delta == 0.0) return f;
  Frame out = f;
  for (double& v : out.y.samples()) v = std::clamp(v + delta, 0.0, 255.0);
  return out;
}

Frame apply_distortion(const Frame& f, const DistortionSpec& spec, std::uint64_t stream) {
  spec.validate();
  switch (spec.kind) {
    case DistortionKind::kAwgn:
      return awgn(f, spec.magnitude, spec.seed, stream);
    case DistortionKind::kGaussianBlur:
      return gaussian_blur(f, spec.magnitude);
    case DistortionKind::kMeanShift:
      return mean_shift(f, spec.magnitude);
  }
  return f;
}

}  // namespace hv3d
