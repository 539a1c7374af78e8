// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

// Deterministic synthetic content for tests.

#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "hv3d/filter.hpp"
#include "hv3d/plane.hpp"

namespace hv3d::testing {

// Band-limited random texture in [16, 240]: white noise, lightly smoothed,
// plus two slow gratings so every region has structure at several scales.
inline Plane texture(int width, int height, std::uint64_t seed, double smoothing = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Plane noise(width, height);
  for (double& s : noise.samples()) s = uni(rng);
  const int radius = static_cast<int>(std::ceil(3 * smoothing));
  const auto taps = gaussian_taps(smoothing, radius);
  Plane smooth = convolve_separable(noise, taps);
  double peak = 1e-12;
  for (double s : smooth.samples()) peak = std::max(peak, std::abs(s));
  Plane out(width, height);
  const double phase = static_cast<double>(seed % 7);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double grating = std::sin(0.21 * x + phase) * std::cos(0.13 * y - phase);
      out(x, y) = 128.0 + 70.0 * smooth(x, y) / peak + 40.0 * grating;
      out(x, y) = std::clamp(std::round(out(x, y)), 16.0, 240.0);
    }
  }
  return out;
}

// Horizontal shift with clamp-to-edge: out(x) = in(x + dx).
inline Plane shifted(const Plane& in, int dx) {
  Plane out(in.width(), in.height());
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) out(x, y) = in.clamped(x + dx, y);
  }
  return out;
}

inline Frame textured_frame(int width, int height, std::uint64_t seed) {
  Frame f;
  f.y = texture(width, height, seed);
  f.u = texture(width / 2, height / 2, seed + 1000, 2.0);
  f.v = texture(width / 2, height / 2, seed + 2000, 2.0);
  return f;
}

// Disparity layout: flat background with a nearer rectangle in the middle.
inline Plane disparity_layout(int width, int height, double background, double foreground) {
  Plane d(width, height, background);
  for (int y = height / 4; y < 3 * height / 4; ++y) {
    for (int x = width / 4; x < 3 * width / 4; ++x) d(x, y) = foreground;
  }
  return d;
}

// Right view built from the left by a per-pixel leftward displacement, so a
// left block at x corresponds to the right block at x - d.
inline Frame right_view(const Frame& left, const Plane& disparity) {
  Frame r = left;
  for (int y = 0; y < left.height(); ++y) {
    for (int x = 0; x < left.width(); ++x) {
      const int d = static_cast<int>(disparity(std::min(x, left.width() - 1), y));
      r.y(x, y) = left.y.clamped(x + d, y);
    }
  }
  for (int y = 0; y < left.u.height(); ++y) {
    for (int x = 0; x < left.u.width(); ++x) {
      const int d = static_cast<int>(disparity(2 * x, 2 * y)) / 2;
      r.u(x, y) = left.u.clamped(x + d, y);
      r.v(x, y) = left.v.clamped(x + d, y);
    }
  }
  return r;
}

inline std::vector<StereoFrame> stereo_clip(int width, int height, int frames, std::uint64_t seed,
                                            double background = 4.0, double foreground = 10.0) {
  std::vector<StereoFrame> clip;
  const Frame base = textured_frame(width + 2 * frames, height, seed);
  for (int i = 0; i < frames; ++i) {
    StereoFrame s;
    s.left.y = block_at(base.y, 2 * i, 0, width, height);
    s.left.u = block_at(base.u, i, 0, width / 2, height / 2);
    s.left.v = block_at(base.v, i, 0, width / 2, height / 2);
    s.disparity = disparity_layout(width, height, background, foreground);
    s.right = right_view(s.left, s.disparity);
    clip.push_back(std::move(s));
  }
  return clip;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("hv3d_" + tag + "_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace hv3d::testing
