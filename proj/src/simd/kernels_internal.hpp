// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hv3d/simd/kernels.hpp"

namespace hv3d::simd {

// Defined only in the translation unit built for the matching ISA.
const KernelTable& avx2_table() noexcept;
const KernelTable& neon_table() noexcept;

}  // namespace hv3d::simd
