// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/plane.hpp"

#include <string>

#include "hv3d/error.hpp"

namespace hv3d {

Plane::Plane(int width, int height, double fill) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw DimensionError("plane dimensions must be positive, got " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
  samples_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

Plane::Plane(int width, int height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width < 1 || height < 1) {
    throw DimensionError("plane dimensions must be positive, got " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
  if (samples_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw DimensionError("plane sample count " + std::to_string(samples_.size()) +
                         " does not match " + std::to_string(width) + "x" + std::to_string(height));
  }
}

Plane block_at(const Plane& plane, int x0, int y0, int w, int h) {
  Plane out(w, h);
  const int max_x = plane.width() - 1;
  const int max_y = plane.height() - 1;
  const bool inside = x0 >= 0 && y0 >= 0 && x0 + w - 1 <= max_x && y0 + h - 1 <= max_y;
  for (int y = 0; y < h; ++y) {
    auto dst = out.row(y);
    if (inside) {
      auto src = plane.row(y0 + y).subspan(static_cast<std::size_t>(x0), static_cast<std::size_t>(w));
      std::copy(src.begin(), src.end(), dst.begin());
      continue;
    }
    auto src = plane.row(std::clamp(y0 + y, 0, max_y));
    for (int x = 0; x < w; ++x) {
      dst[x] = src[std::clamp(x0 + x, 0, max_x)];
    }
  }
  return out;
}

bool is_constant(const Plane& plane) noexcept {
  auto s = plane.samples();
  if (s.empty()) return true;
  return std::all_of(s.begin(), s.end(), [first = s.front()](double v) { return v == first; });
}

Frame Frame::filled(int width, int height, double luma, double chroma) {
  if (width % 2 != 0 || height % 2 != 0) {
    throw DimensionError("4:2:0 frames need even dimensions, got " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
  return Frame{Plane(width, height, luma), Plane(width / 2, height / 2, chroma),
               Plane(width / 2, height / 2, chroma)};
}

void Frame::validate() const {
  if (y.empty() || y.width() % 2 != 0 || y.height() % 2 != 0) {
    throw DimensionError("4:2:0 luma must have even, non-zero dimensions, got " +
                         std::to_string(y.width()) + "x" + std::to_string(y.height()));
  }
  for (const Plane* c : {&u, &v}) {
    if (c->width() != y.width() / 2 || c->height() != y.height() / 2) {
      throw DimensionError("chroma plane " + std::to_string(c->width()) + "x" +
                           std::to_string(c->height()) + " is not half of luma " +
                           std::to_string(y.width()) + "x" + std::to_string(y.height()));
    }
  }
}

void StereoFrame::validate() const {
  left.validate();
  right.validate();
  if (!left.y.same_shape(right.y)) {
    throw DimensionError("left and right views differ in size");
  }
  if (!disparity.same_shape(left.y)) {
    throw DimensionError("disparity map " + std::to_string(disparity.width()) + "x" +
                         std::to_string(disparity.height()) + " does not match luma " +
                         std::to_string(left.width()) + "x" + std::to_string(left.height()));
  }
}

void require_same_geometry(const StereoFrame& ref, const StereoFrame& dist) {
  ref.validate();
  dist.validate();
  if (!ref.left.y.same_shape(dist.left.y)) {
    throw DimensionError("reference " + std::to_string(ref.width()) + "x" +
                         std::to_string(ref.height()) + " and distorted " +
                         std::to_string(dist.width()) + "x" + std::to_string(dist.height()) +
                         " frames differ in size");
  }
}

TruncatedFileError::TruncatedFileError(const std::string& path, std::uintmax_t expected,
                                       std::uintmax_t actual)
    : IoError(path + ": expected " + std::to_string(expected) + " bytes, found " +
              std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

}  // namespace hv3d
