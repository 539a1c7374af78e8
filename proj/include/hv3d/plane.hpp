// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace hv3d {

/// Single-channel row-major grid of real samples (luma, chroma or disparity).
///
/// 8-bit content is promoted to double once on load; all kernels work on the
/// promoted values. A default-constructed Plane is empty (0x0) and exists only
/// so Planes can live in containers; every other constructor requires
/// width, height >= 1.
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, double fill = 0.0);
  Plane(int width, int height, std::vector<double> samples);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  double operator()(int x, int y) const { return samples_[index(x, y)]; }
  double& operator()(int x, int y) { return samples_[index(x, y)]; }

  /// Edge-replicating read: coordinates outside the grid snap to the nearest pixel.
  double clamped(int x, int y) const {
    return (*this)(std::clamp(x, 0, width_ - 1), std::clamp(y, 0, height_ - 1));
  }

  std::span<const double> row(int y) const {
    return {samples_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
  }
  std::span<double> row(int y) {
    return {samples_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
  }

  std::span<const double> samples() const noexcept { return samples_; }
  std::span<double> samples() noexcept { return samples_; }
  const double* data() const noexcept { return samples_.data(); }
  double* data() noexcept { return samples_.data(); }

  bool same_shape(const Plane& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> samples_;
};

/// Copy a w x h region starting at (x0, y0). Coordinates may fall outside the
/// plane; such samples replicate the nearest edge pixel, so the result is
/// always full-size.
Plane block_at(const Plane& plane, int x0, int y0, int w, int h);

/// True when every sample equals the first one.
bool is_constant(const Plane& plane) noexcept;

/// One 4:2:0 picture: full-resolution luma, half-resolution chroma.
struct Frame {
  Plane y;
  Plane u;
  Plane v;

  int width() const noexcept { return y.width(); }
  int height() const noexcept { return y.height(); }

  /// Builds a frame with every plane filled with the given values.
  static Frame filled(int width, int height, double luma, double chroma = 128.0);

  /// Throws DimensionError unless the chroma planes are exactly half the luma size.
  void validate() const;

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Left and right views plus the disparity map of that view pair.
struct StereoFrame {
  Frame left;
  Frame right;
  Plane disparity;

  int width() const noexcept { return left.width(); }
  int height() const noexcept { return left.height(); }

  void validate() const;
};

/// Throws DimensionError if two stereo frames cannot be compared.
void require_same_geometry(const StereoFrame& ref, const StereoFrame& dist);

}  // namespace hv3d
