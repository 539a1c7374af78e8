// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/ssim.hpp"

#include <string>

#include "hv3d/error.hpp"

namespace hv3d {

Block4 block4_at(const Plane& plane, int x0, int y0) {
  Block4 out;
  const bool inside = x0 >= 0 && y0 >= 0 && x0 + 4 <= plane.width() && y0 + 4 <= plane.height();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out(r, c) = inside ? plane(x0 + c, y0 + r) : plane.clamped(x0 + c, y0 + r);
    }
  }
  return out;
}

Block4 to_block4(const Plane& p) {
  if (p.width() != 4 || p.height() != 4) {
    throw DimensionError("expected a 4x4 block, got " + std::to_string(p.width()) + "x" +
                         std::to_string(p.height()));
  }
  Block4 out;
  std::copy(p.samples().begin(), p.samples().end(), out.v.begin());
  return out;
}

double ssim_block(const Block4& a, const Block4& b, const SsimConstants& c) {
  constexpr double n = 16.0;
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    sum_a += a.v[i];
    sum_b += b.v[i];
  }
  const double mu_a = sum_a / n;
  const double mu_b = sum_b / n;
  double var_a = 0.0;
  double var_b = 0.0;
  double cov = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    const double da = a.v[i] - mu_a;
    const double db = b.v[i] - mu_b;
    var_a += da * da;
    var_b += db * db;
    cov += da * db;
  }
  var_a /= n - 1.0;
  var_b /= n - 1.0;
  cov /= n - 1.0;
  const double c1 = c.c1();
  const double c2 = c.c2();
  return ((2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2)) /
         ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
}

double ssim_block(const Plane& a, const Plane& b, const SsimConstants& c) {
  return ssim_block(to_block4(a), to_block4(b), c);
}

}  // namespace hv3d
