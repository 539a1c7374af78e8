// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

// AArch64 only: Advanced SIMD is mandatory there, so no runtime probe is needed.

#include <arm_neon.h>

#include <cmath>

#include "kernels_internal.hpp"

namespace hv3d::simd {
namespace {

void fir_row_neon(std::span<const double> src, std::span<const double> taps, std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t tap_count = taps.size();
  const double* s = src.data();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < tap_count; ++k) {
      acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(taps[k]), vld1q_f64(s + i + k)));
    }
    vst1q_f64(out.data() + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < tap_count; ++k) {
      acc += taps[k] * s[i + k];
    }
    out[i] = acc;
  }
}

void fir_column_neon(std::span<const double* const> rows, std::span<const double> taps,
                     std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t tap_count = taps.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < tap_count; ++k) {
      acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(taps[k]), vld1q_f64(rows[k] + i)));
    }
    vst1q_f64(out.data() + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < tap_count; ++k) {
      acc += taps[k] * rows[k][i];
    }
    out[i] = acc;
  }
}

double sad_neon(const double* a, std::size_t stride_a, const double* b, std::size_t stride_b,
                std::size_t w, std::size_t h) {
  float64x2_t acc = vdupq_n_f64(0.0);
  double tail = 0.0;
  for (std::size_t y = 0; y < h; ++y) {
    const double* ra = a + y * stride_a;
    const double* rb = b + y * stride_b;
    std::size_t x = 0;
    for (; x + 2 <= w; x += 2) {
      acc = vaddq_f64(acc, vabdq_f64(vld1q_f64(ra + x), vld1q_f64(rb + x)));
    }
    for (; x < w; ++x) {
      tail += std::fabs(ra[x] - rb[x]);
    }
  }
  return vaddvq_f64(acc) + tail;
}

double block_sum_neon(const double* a, std::size_t stride, std::size_t w, std::size_t h) {
  float64x2_t acc = vdupq_n_f64(0.0);
  double tail = 0.0;
  for (std::size_t y = 0; y < h; ++y) {
    const double* r = a + y * stride;
    std::size_t x = 0;
    for (; x + 2 <= w; x += 2) {
      acc = vaddq_f64(acc, vld1q_f64(r + x));
    }
    for (; x < w; ++x) {
      tail += r[x];
    }
  }
  return vaddvq_f64(acc) + tail;
}

double block_sq_dev_neon(const double* a, std::size_t stride, std::size_t w, std::size_t h,
                         double mean) {
  const float64x2_t m = vdupq_n_f64(mean);
  float64x2_t acc = vdupq_n_f64(0.0);
  double tail = 0.0;
  for (std::size_t y = 0; y < h; ++y) {
    const double* r = a + y * stride;
    std::size_t x = 0;
    for (; x + 2 <= w; x += 2) {
      const float64x2_t d = vsubq_f64(m, vld1q_f64(r + x));
      acc = vaddq_f64(acc, vmulq_f64(d, d));
    }
    for (; x < w; ++x) {
      const double d = mean - r[x];
      tail += d * d;
    }
  }
  return vaddvq_f64(acc) + tail;
}

void multiply_neon(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out.data() + i, vmulq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i)));
  }
  for (; i < n; ++i) {
    out[i] = a[i] * b[i];
  }
}

constexpr KernelTable kNeonTable{
    Isa::kNeon,     fir_row_neon,      fir_column_neon, sad_neon,
    block_sum_neon, block_sq_dev_neon, multiply_neon,
};

}  // namespace

const KernelTable& neon_table() noexcept { return kNeonTable; }

}  // namespace hv3d::simd
