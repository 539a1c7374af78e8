// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace hv3d::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa) noexcept;

/// Inner loops shared by the filters, block matching and window statistics.
///
/// Every variant must agree with the scalar reference. The FIR kernels are
/// bit-identical across variants (same per-output accumulation order, no
/// fused multiply-add); the reductions are equal up to summation order.
struct KernelTable {
  Isa isa;

  /// out[i] = sum_k taps[k] * src[i + k]; src.size() == out.size() + taps.size() - 1.
  void (*fir_row)(std::span<const double> src, std::span<const double> taps, std::span<double> out);

  /// out[i] = sum_k taps[k] * rows[k][i] for i < out.size(); one row pointer per tap.
  void (*fir_column)(std::span<const double* const> rows, std::span<const double> taps,
                     std::span<double> out);

  /// Sum of absolute differences over a w x h block addressed by row strides.
  double (*sad)(const double* a, std::size_t stride_a, const double* b, std::size_t stride_b,
                std::size_t w, std::size_t h);

  /// Sum over a w x h block.
  double (*block_sum)(const double* a, std::size_t stride, std::size_t w, std::size_t h);

  /// Sum of squared deviations from `mean` over a w x h block.
  double (*block_sq_dev)(const double* a, std::size_t stride, std::size_t w, std::size_t h,
                         double mean);

  /// out[i] = a[i] * b[i].
  void (*multiply)(std::span<const double> a, std::span<const double> b, std::span<double> out);
};

const KernelTable& scalar_kernels() noexcept;

/// Vector tables, or nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

/// Table in use. Selected on first call: the widest supported variant, unless
/// the HV3D_FORCE_ISA environment variable names another ("scalar", "avx2", "neon").
const KernelTable& kernels() noexcept;

/// Overrides the active table; returns false if `isa` is unavailable here.
bool force_isa(Isa isa) noexcept;

}  // namespace hv3d::simd
