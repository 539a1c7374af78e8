// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/disparity.hpp"

#include <string>

#include "hv3d/error.hpp"
#include "hv3d/simd/kernels.hpp"

namespace hv3d {

NormalizedDisparity normalize_disparity(const Plane& disparity) {
  auto s = disparity.samples();
  const double max = s.empty() ? 0.0 : *std::max_element(s.begin(), s.end());
  NormalizedDisparity out{disparity, max > 0.0 ? max : 0.0};
  if (max > 0.0) {
    for (double& v : out.plane.samples()) v /= max;
  } else {
    for (double& v : out.plane.samples()) v = 0.0;
  }
  return out;
}

int block_count(const Plane& plane) { return (plane.width() / 4) * (plane.height() / 4); }

double block_disparity_variance(const NormalizedDisparity& nd, int block_index, int window) {
  if (window < 4) throw ValidationError("variance window must be >= 4, got " + std::to_string(window));
  const Plane& p = nd.plane;
  const int cols = p.width() / 4;
  if (cols == 0 || block_index < 0 || block_index >= block_count(p)) {
    throw ValidationError("block index " + std::to_string(block_index) + " out of range");
  }
  const int x0 = 4 * (block_index % cols) - (window - 4) / 2;
  const int y0 = 4 * (block_index / cols) - (window - 4) / 2;

  const auto& k = simd::kernels();
  const std::size_t w = static_cast<std::size_t>(window);
  const bool inside = x0 >= 0 && y0 >= 0 && x0 + window <= p.width() && y0 + window <= p.height();
  Plane copy;
  const double* base = nullptr;
  std::size_t stride = 0;
  if (inside) {
    base = p.data() + static_cast<std::size_t>(y0) * p.width() + x0;
    stride = static_cast<std::size_t>(p.width());
  } else {
    copy = block_at(p, x0, y0, window, window);
    base = copy.data();
    stride = w;
  }
  const double n = static_cast<double>(w * w);
  const double mean = k.block_sum(base, stride, w, w) / n;
  return k.block_sq_dev(base, stride, w, w, mean) / (n - 1.0);
}

VarianceField variance_field(const NormalizedDisparity& nd, int window) {
  const int cols = nd.plane.width() / 4;
  const int rows = nd.plane.height() / 4;
  if (cols == 0 || rows == 0) throw DimensionError("disparity map smaller than one 4x4 block");
  VarianceField f{Plane(cols, rows), 0.0};
  for (int i = 0; i < cols * rows; ++i) {
    const double v = block_disparity_variance(nd, i, window);
    f.sigma2(i % cols, i / cols) = v;
    f.max_sigma2 = std::max(f.max_sigma2, v);
  }
  return f;
}

double variance_term(const VarianceField& field) {
  if (!(field.max_sigma2 > 0.0)) return 0.0;
  double total = 0.0;
  for (double v : field.sigma2.samples()) total += v;
  return total / (static_cast<double>(field.sigma2.size()) * field.max_sigma2);
}

double variance_term(const NormalizedDisparity& nd, int window) {
  return variance_term(variance_field(nd, window));
}

Plane estimate_disparity(const Plane& left_y, const Plane& right_y, int max_disp) {
  if (!left_y.same_shape(right_y)) throw DimensionError("estimate_disparity: view sizes differ");
  if (max_disp < 1 || max_disp > 128) {
    throw ValidationError("max disparity must be in [1, 128], got " + std::to_string(max_disp));
  }
  const auto& k = simd::kernels();
  const int w = left_y.width();
  const int h = left_y.height();
  const std::size_t stride = static_cast<std::size_t>(w);
  Plane out(w, h);
  for (int ty = 0; ty < h; ty += kEstimatorBlock) {
    const int th = std::min(kEstimatorBlock, h - ty);
    for (int tx = 0; tx < w; tx += kEstimatorBlock) {
      const int tw = std::min(kEstimatorBlock, w - tx);
      const double* left = left_y.data() + static_cast<std::size_t>(ty) * stride + tx;
      int best_d = 0;
      double best_sad = 0.0;
      for (int d = 0; d <= max_disp; ++d) {
        const int rx = tx - d;
        double sad = 0.0;
        if (rx >= 0) {
          sad = k.sad(left, stride, right_y.data() + static_cast<std::size_t>(ty) * stride + rx, stride,
                      static_cast<std::size_t>(tw), static_cast<std::size_t>(th));
        } else {
          const Plane shifted = block_at(right_y, rx, ty, tw, th);
          sad = k.sad(left, stride, shifted.data(), static_cast<std::size_t>(tw),
                      static_cast<std::size_t>(tw), static_cast<std::size_t>(th));
        }
        if (d == 0 || sad < best_sad) {
          best_sad = sad;
          best_d = d;
        }
      }
      for (int y = ty; y < ty + th; ++y) {
        for (int x = tx; x < tx + tw; ++x) out(x, y) = best_d;
      }
    }
  }
  return out;
}

}  // namespace hv3d
