// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/csf.hpp"

namespace hv3d {

const std::array<int, 64> kJpegLuminanceQuant = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99,
};

Block4 downsampled_jpeg_table() {
  Block4 q;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      int sum = 0;
      for (int dr = 0; dr < 2; ++dr) {
        for (int dc = 0; dc < 2; ++dc) {
          sum += kJpegLuminanceQuant[static_cast<std::size_t>((2 * r + dr) * 8 + 2 * c + dc)];
        }
      }
      q(r, c) = sum / 4.0;
    }
  }
  return q;
}

CsfMask build_csf_mask() {
  const Block4 q = downsampled_jpeg_table();
  Block4 raw;
  double total = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    raw.v[i] = 1.0 / q.v[i];
    total += raw.v[i];
  }
  const double mean = total / 16.0;
  CsfMask mask;
  for (std::size_t i = 0; i < 16; ++i) mask.coefficients.v[i] = raw.v[i] / mean;
  return mask;
}

Block4 apply_csf(const Block4& raw, const CsfMask& mask) {
  Block4 out;
  for (std::size_t i = 0; i < 16; ++i) out.v[i] = raw.v[i] * mask.coefficients.v[i];
  return out;
}

}  // namespace hv3d
