// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2; only reached after dispatch confirms CPU support.

#include <immintrin.h>

#include <cmath>

#include "kernels_internal.hpp"

namespace hv3d::simd {
namespace {

// Four lanes of double; accumulation order per output matches the scalar loop.
void fir_row_avx2(std::span<const double> src, std::span<const double> taps, std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t tap_count = taps.size();
  const double* s = src.data();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < tap_count; ++k) {
      const __m256d t = _mm256_set1_pd(taps[k]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(t, _mm256_loadu_pd(s + i + k)));
    }
    _mm256_storeu_pd(out.data() + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < tap_count; ++k) {
      acc += taps[k] * s[i + k];
    }
    out[i] = acc;
  }
}

void fir_column_avx2(std::span<const double* const> rows, std::span<const double> taps,
                     std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t tap_count = taps.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < tap_count; ++k) {
      const __m256d t = _mm256_set1_pd(taps[k]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(t, _mm256_loadu_pd(rows[k] + i)));
    }
    _mm256_storeu_pd(out.data() + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < tap_count; ++k) {
      acc += taps[k] * rows[k][i];
    }
    out[i] = acc;
  }
}

inline double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double sad_avx2(const double* a, std::size_t stride_a, const double* b, std::size_t stride_b,
                std::size_t w, std::size_t h) {
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d acc = _mm256_setzero_pd();
  double tail = 0.0;
  for (std::size_t y = 0; y < h; ++y) {
    const double* ra = a + y * stride_a;
    const double* rb = b + y * stride_b;
    std::size_t x = 0;
    for (; x + 4 <= w; x += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ra + x), _mm256_loadu_pd(rb + x));
      acc = _mm256_add_pd(acc, _mm256_and_pd(d, abs_mask));
    }
    for (; x < w; ++x) {
      tail += std::fabs(ra[x] - rb[x]);
    }
  }
  return horizontal_sum(acc) + tail;
}

double block_sum_avx2(const double* a, std::size_t stride, std::size_t w, std::size_t h) {
  __m256d acc = _mm256_setzero_pd();
  double tail = 0.0;
  for (std::size_t y = 0; y < h; ++y) {
    const double* r = a + y * stride;
    std::size_t x = 0;
    for (; x + 4 <= w; x += 4) {
      acc = _mm256_add_pd(acc, _mm256_loadu_pd(r + x));
    }
    for (; x < w; ++x) {
      tail += r[x];
    }
  }
  return horizontal_sum(acc) + tail;
}

double block_sq_dev_avx2(const double* a, std::size_t stride, std::size_t w, std::size_t h,
                         double mean) {
  const __m256d m = _mm256_set1_pd(mean);
  __m256d acc = _mm256_setzero_pd();
  double tail = 0.0;
  for (std::size_t y = 0; y < h; ++y) {
    const double* r = a + y * stride;
    std::size_t x = 0;
    for (; x + 4 <= w; x += 4) {
      const __m256d d = _mm256_sub_pd(m, _mm256_loadu_pd(r + x));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    for (; x < w; ++x) {
      const double d = mean - r[x];
      tail += d * d;
    }
  }
  return horizontal_sum(acc) + tail;
}

void multiply_avx2(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i,
                     _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
  }
  for (; i < n; ++i) {
    out[i] = a[i] * b[i];
  }
}

constexpr KernelTable kAvx2Table{
    Isa::kAvx2,     fir_row_avx2,      fir_column_avx2, sad_avx2,
    block_sum_avx2, block_sq_dev_avx2, multiply_avx2,
};

}  // namespace

const KernelTable& avx2_table() noexcept { return kAvx2Table; }

}  // namespace hv3d::simd
