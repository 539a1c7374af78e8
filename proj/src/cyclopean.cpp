// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/cyclopean.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "hv3d/dct4.hpp"
#include "hv3d/error.hpp"
#include "hv3d/simd/kernels.hpp"

namespace hv3d {
namespace {

void require_block_grid(const Plane& p) {
  if (p.width() < 4 || p.height() < 4) {
    throw DimensionError("cyclopean model needs at least 4x4 luma, got " + std::to_string(p.width()) +
                         "x" + std::to_string(p.height()));
  }
}

}  // namespace

double block_median_disparity(const Plane& disparity, PixelPoint origin) {
  Block4 b = block4_at(disparity, origin.x, origin.y);
  std::sort(b.v.begin(), b.v.end());
  return 0.5 * (b.v[7] + b.v[8]);
}

BlockMatch match_block(const Plane& left_y, const Plane& right_y, const Plane& disparity,
                       PixelPoint left_origin) {
  require_block_grid(left_y);
  if (!left_y.same_shape(right_y) || !left_y.same_shape(disparity)) {
    throw DimensionError("match_block: view and disparity sizes differ");
  }
  const int max_x = right_y.width() - 4;
  const int y = std::clamp(left_origin.y, 0, right_y.height() - 4);
  const int candidate =
      left_origin.x - static_cast<int>(std::lround(block_median_disparity(disparity, left_origin)));

  const Block4 left_block = block4_at(left_y, left_origin.x, left_origin.y);
  const auto& k = simd::kernels();
  const std::size_t stride = static_cast<std::size_t>(right_y.width());

  // Visit offsets 0, -1, +1, -2, +2, ... so a strict '<' keeps the preferred tie.
  BlockMatch best{left_origin, {0, y}, 0, 0.0};
  bool have_best = false;
  for (int step = 0; step <= 2 * kMatchSearchRadius; ++step) {
    const int offset = (step % 2 == 1) ? -(step + 1) / 2 : step / 2;
    const int x = std::clamp(candidate + offset, 0, max_x);
    const double sad = k.sad(left_block.v.data(), 4, right_y.data() + y * stride + x, stride, 4, 4);
    if (!have_best || sad < best.sad) {
      best.right_origin = {x, y};
      best.sad = sad;
      have_best = true;
    }
  }
  best.disparity_used = left_origin.x - best.right_origin.x;
  return best;
}

Block4 cyclopean_block(const Block4& left, const Block4& right, const CsfMask& mask) {
  return idct4(apply_csf(fuse_blocks(left, right), mask));
}

Plane cyclopean_quality_map(const StereoFrame& ref, const StereoFrame& dist, const CsfMask& mask,
                            const SsimConstants& c) {
  require_same_geometry(ref, dist);
  require_block_grid(ref.left.y);
  const int cols = ref.width() / 4;
  const int rows = ref.height() / 4;
  Plane out(cols, rows);
  for (int by = 0; by < rows; ++by) {
    for (int bx = 0; bx < cols; ++bx) {
      const PixelPoint origin{4 * bx, 4 * by};
      const BlockMatch mr = match_block(ref.left.y, ref.right.y, ref.disparity, origin);
      const BlockMatch md = match_block(dist.left.y, dist.right.y, dist.disparity, origin);
      const Block4 xr = cyclopean_block(block4_at(ref.left.y, origin.x, origin.y),
                                        block4_at(ref.right.y, mr.right_origin.x, mr.right_origin.y),
                                        mask);
      const Block4 xd = cyclopean_block(block4_at(dist.left.y, origin.x, origin.y),
                                        block4_at(dist.right.y, md.right_origin.x, md.right_origin.y),
                                        mask);
      out(bx, by) = ssim_block(xr, xd, c);
    }
  }
  return out;
}

double cyclopean_quality(const StereoFrame& ref, const StereoFrame& dist, const CsfMask& mask,
                         const SsimConstants& c) {
  const Plane map = cyclopean_quality_map(ref, dist, mask, c);
  double total = 0.0;
  for (double v : map.samples()) total += v;
  return total / static_cast<double>(map.size());
}

}  // namespace hv3d
