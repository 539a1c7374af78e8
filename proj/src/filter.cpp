// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/filter.hpp"

#include <cmath>

#include "hv3d/error.hpp"
#include "hv3d/simd/kernels.hpp"

namespace hv3d {

std::vector<double> gaussian_taps(double sigma, int radius) {
  if (sigma < 0.0 || radius < 0) {
    throw ValidationError("gaussian sigma and radius must be non-negative");
  }
  if (sigma == 0.0 || radius == 0) return {1.0};
  std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
  double total = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double v = std::exp(-static_cast<double>(i * i) / (2.0 * sigma * sigma));
    taps[static_cast<std::size_t>(i + radius)] = v;
    total += v;
  }
  for (double& t : taps) t /= total;
  return taps;
}

Plane convolve_separable(const Plane& plane, std::span<const double> taps) {
  if (taps.empty() || taps.size() % 2 == 0) {
    throw ValidationError("convolution kernel must have odd length");
  }
  const auto& k = simd::kernels();
  const int w = plane.width();
  const int h = plane.height();
  const int r = static_cast<int>(taps.size() / 2);

  Plane horizontal(w, h);
  std::vector<double> padded(static_cast<std::size_t>(w + 2 * r));
  for (int y = 0; y < h; ++y) {
    auto src = plane.row(y);
    for (int i = 0; i < r; ++i) {
      padded[static_cast<std::size_t>(i)] = src.front();
      padded[static_cast<std::size_t>(w + r + i)] = src.back();
    }
    std::copy(src.begin(), src.end(), padded.begin() + r);
    k.fir_row(padded, taps, horizontal.row(y));
  }

  Plane out(w, h);
  std::vector<const double*> rows(taps.size());
  for (int y = 0; y < h; ++y) {
    for (int i = 0; i < static_cast<int>(taps.size()); ++i) {
      rows[static_cast<std::size_t>(i)] = horizontal.row(std::clamp(y + i - r, 0, h - 1)).data();
    }
    k.fir_column(rows, taps, out.row(y));
  }
  return out;
}

Plane decimate2(const Plane& plane) {
  const int w = (plane.width() + 1) / 2;
  const int h = (plane.height() + 1) / 2;
  Plane out(w, h);
  for (int y = 0; y < h; ++y) {
    auto src = plane.row(2 * y);
    auto dst = out.row(y);
    for (int x = 0; x < w; ++x) dst[x] = src[2 * x];
  }
  return out;
}

Plane multiply(const Plane& a, const Plane& b) {
  if (!a.same_shape(b)) throw DimensionError("multiply: plane shapes differ");
  Plane out(a.width(), a.height());
  simd::kernels().multiply(a.samples(), b.samples(), out.samples());
  return out;
}

}  // namespace hv3d
