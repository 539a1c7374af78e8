// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "hv3d/simd/kernels.hpp"

namespace hv3d::simd {
namespace {

void fir_row_scalar(std::span<const double> src, std::span<const double> taps, std::span<double> out) {
  const std::size_t tap_count = taps.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < tap_count; ++k) {
      acc += taps[k] * src[i + k];
    }
    out[i] = acc;
  }
}

void fir_column_scalar(std::span<const double* const> rows, std::span<const double> taps,
                       std::span<double> out) {
  const std::size_t tap_count = taps.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < tap_count; ++k) {
      acc += taps[k] * rows[k][i];
    }
    out[i] = acc;
  }
}

double sad_scalar(const double* a, std::size_t stride_a, const double* b, std::size_t stride_b,
                  std::size_t w, std::size_t h) {
  double acc = 0.0;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      acc += std::fabs(a[y * stride_a + x] - b[y * stride_b + x]);
    }
  }
  return acc;
}

double block_sum_scalar(const double* a, std::size_t stride, std::size_t w, std::size_t h) {
  double acc = 0.0;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      acc += a[y * stride + x];
    }
  }
  return acc;
}

double block_sq_dev_scalar(const double* a, std::size_t stride, std::size_t w, std::size_t h,
                           double mean) {
  double acc = 0.0;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const double d = mean - a[y * stride + x];
      acc += d * d;
    }
  }
  return acc;
}

void multiply_scalar(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a[i] * b[i];
  }
}

constexpr KernelTable kScalarTable{
    Isa::kScalar,     fir_row_scalar,      fir_column_scalar, sad_scalar,
    block_sum_scalar, block_sq_dev_scalar, multiply_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalarTable; }

}  // namespace hv3d::simd
