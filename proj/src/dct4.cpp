// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/dct4.hpp"

#include <cmath>
#include <numbers>

namespace hv3d {
namespace {

// basis[k][n] = a_k cos(pi (2n + 1) k / 8), a_0 = 1/2, a_k = 1/sqrt(2).
struct Basis {
  double m[4][4];

  Basis() {
    for (int k = 0; k < 4; ++k) {
      const double a = k == 0 ? 0.5 : std::sqrt(0.5);
      for (int n = 0; n < 4; ++n) {
        m[k][n] = a * std::cos(std::numbers::pi * (2 * n + 1) * k / 8.0);
      }
    }
  }
};

const Basis& basis() {
  static const Basis b;
  return b;
}

// out = M * in * M^T when forward, M^T * in * M otherwise.
Block4 transform(const Block4& in, bool forward) {
  const auto& m = basis().m;
  auto coef = [&](int i, int j) { return forward ? m[i][j] : m[j][i]; };
  Block4 tmp;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += coef(r, k) * in(k, c);
      tmp(r, c) = acc;
    }
  }
  Block4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += tmp(r, k) * coef(c, k);
      out(r, c) = acc;
    }
  }
  return out;
}

}  // namespace

Block4 dct4(const Block4& pixels) { return transform(pixels, true); }

Block4 idct4(const Block4& coeffs) { return transform(coeffs, false); }

FusedPair fuse_blocks_full(const Block4& left, const Block4& right) {
  const Block4 dl = dct4(left);
  const Block4 dr = dct4(right);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  FusedPair out;
  for (std::size_t i = 0; i < 16; ++i) {
    out.low.v[i] = (dl.v[i] + dr.v[i]) * inv_sqrt2;
    out.high.v[i] = (dl.v[i] - dr.v[i]) * inv_sqrt2;
  }
  return out;
}

Block4 fuse_blocks(const Block4& left, const Block4& right) {
  return fuse_blocks_full(left, right).low;
}

}  // namespace hv3d
