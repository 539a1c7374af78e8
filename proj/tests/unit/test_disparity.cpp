// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "hv3d/disparity.hpp"
#include "hv3d/error.hpp"

namespace hv3d {
namespace {

Plane random_map(int w, int h, std::uint64_t seed, int max = 64) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> v(0, max);
  Plane p(w, h);
  for (double& s : p.samples()) s = v(rng);
  return p;
}

double oracle_variance_term(const NormalizedDisparity& nd, int window) {
  const int cols = nd.plane.width() / 4, rows = nd.plane.height() / 4;
  const int half = (window - 4) / 2;
  std::vector<double> v;
  for (int by = 0; by < rows; ++by) {
    for (int bx = 0; bx < cols; ++bx) v.push_back(oracle::window_variance(nd.plane, 4 * bx - half, 4 * by - half, window));
  }
  const double mx = *std::max_element(v.begin(), v.end());
  if (mx == 0) return 0;
  double s = 0;
  for (double x : v) s += x;
  return s / (static_cast<double>(v.size()) * mx);
}

TEST(Normalize, DividesByFrameMax) {
  const NormalizedDisparity nd = normalize_disparity(Plane(2, 2, std::vector<double>{0, 64, 128, 255}));
  EXPECT_EQ(nd.source_max, 255);
  EXPECT_NEAR(nd.plane(1, 0), 0.2510, 1e-4);
  EXPECT_NEAR(nd.plane(0, 1), 0.5020, 1e-4);
  EXPECT_EQ(nd.plane(1, 1), 1.0);
  EXPECT_EQ(nd.plane(0, 0), 0.0);
}

TEST(Normalize, DegenerateAndConstantMaps) {
  const NormalizedDisparity zero = normalize_disparity(Plane(4, 4, 0.0));
  EXPECT_EQ(zero.source_max, 0.0);
  for (double v : zero.plane.samples()) EXPECT_EQ(v, 0.0);
  const NormalizedDisparity flat = normalize_disparity(Plane(4, 4, 13.0));
  for (double v : flat.plane.samples()) EXPECT_EQ(v, 1.0);
}

TEST(Normalize, RangeAndPeak) {
  const NormalizedDisparity nd = normalize_disparity(random_map(40, 30, 1));
  bool has_one = false;
  for (double v : nd.plane.samples()) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    has_one = has_one || v == 1.0;
  }
  EXPECT_TRUE(has_one);
}

TEST(Normalize, IntegerScalingLeavesOutputUnchanged) {
  const Plane raw = random_map(48, 32, 2);
  const NormalizedDisparity base = normalize_disparity(raw);
  for (double c : {2.0, 3.0, 7.0}) {
    Plane scaled = raw;
    for (double& s : scaled.samples()) s *= c;
    const NormalizedDisparity nd = normalize_disparity(scaled);
    EXPECT_EQ(nd.plane, base.plane);
    EXPECT_EQ(variance_term(nd), variance_term(base));
  }
}

TEST(BlockVariance, ConstantRegionIsZero) {
  const NormalizedDisparity nd = normalize_disparity(Plane(64, 64, 9.0));
  for (int i = 0; i < block_count(nd.plane); ++i) EXPECT_EQ(block_disparity_variance(nd, i), 0.0);
}

TEST(BlockVariance, HalfZerosHalfOnes) {
  Plane p(28, 28);
  for (int y = 0; y < 28; ++y) {
    for (int x = 14; x < 28; ++x) p(x, y) = 1.0;
  }
  NormalizedDisparity nd{p, 1.0};
  Plane big(32, 32, 0.0);
  for (int y = 0; y < 32; ++y) {
    for (int x = 14; x < 32; ++x) big(x, y) = 1.0;
  }
  // Block 3 of a 32x32 map sits at (12,0); its window covers x in [0,28), clamped in y.
  const NormalizedDisparity nd_big{big, 1.0};
  const double want = (392 * 0.25 + 392 * 0.25) / 783;
  EXPECT_NEAR(want, 0.25032, 1e-5);
  EXPECT_NEAR(block_disparity_variance(nd_big, 3), want, 1e-15);
  EXPECT_NEAR(oracle::window_variance(nd.plane, 0, 0, 28), want, 1e-15);
}

TEST(BlockVariance, InteriorAndEdgeBlocksMatchDoubleLoopOracle) {
  const NormalizedDisparity nd = normalize_disparity(random_map(480, 800, 3, 255));
  const int cols = 120;
  for (int i : {0, 1, 119, 120, 2500, 5000, 12345, 23999, 23880}) {
    const double want = oracle::window_variance(nd.plane, 4 * (i % cols) - 12, 4 * (i / cols) - 12, 28);
    EXPECT_NEAR(block_disparity_variance(nd, i), want, 1e-12) << "block " << i;
  }
}

TEST(BlockVariance, OtherWindowSizes) {
  const NormalizedDisparity nd = normalize_disparity(random_map(40, 40, 4));
  for (int window : {4, 8, 12, 55}) {
    const int half = (window - 4) / 2;
    for (int i = 0; i < block_count(nd.plane); i += 7) {
      const double want = oracle::window_variance(nd.plane, 4 * (i % 10) - half, 4 * (i / 10) - half, window);
      EXPECT_NEAR(block_disparity_variance(nd, i, window), want, 1e-12);
    }
  }
}

TEST(BlockVariance, Errors) {
  const NormalizedDisparity nd = normalize_disparity(random_map(16, 16, 5));
  EXPECT_THROW(block_disparity_variance(nd, 0, 3), ValidationError);
  EXPECT_THROW(block_disparity_variance(nd, 16), ValidationError);
  EXPECT_THROW(block_disparity_variance(nd, -1), ValidationError);
  EXPECT_THROW(variance_field(normalize_disparity(Plane(3, 8))), DimensionError);
}

TEST(VarianceTerm, ConstantMapIsZero) {
  EXPECT_EQ(variance_term(normalize_disparity(Plane(64, 64, 6.0))), 0.0);
  EXPECT_EQ(variance_term(normalize_disparity(Plane(64, 64, 0.0))), 0.0);
}

TEST(VarianceTerm, EqualVariancesGiveOne) {
  EXPECT_EQ(variance_term(VarianceField{Plane(5, 4, 0.25), 0.25}), 1.0);
  VarianceField f{Plane(5, 4, 0.03), 0.03};
  EXPECT_NEAR(variance_term(f), 1.0, 1e-15);
  f.sigma2(2, 2) = 0.01;
  EXPECT_LT(variance_term(f), 1.0);
}

TEST(VarianceTerm, RandomMapMatchesOracleAndIsInUnitInterval) {
  for (std::uint64_t seed : {6u, 7u, 8u}) {
    const NormalizedDisparity nd = normalize_disparity(random_map(64, 48, seed));
    const double s = variance_term(nd);
    EXPECT_GT(s, 0.0);
    EXPECT_LT(s, 1.0);
    EXPECT_NEAR(s, oracle_variance_term(nd, 28), 1e-12);
  }
  const NormalizedDisparity layered = normalize_disparity(testing::disparity_layout(64, 64, 4, 10));
  EXPECT_NEAR(variance_term(layered), oracle_variance_term(layered, 28), 1e-12);
}

TEST(VarianceField, MaxIsMaxOfEntries) {
  const VarianceField f = variance_field(normalize_disparity(random_map(32, 24, 9)));
  EXPECT_EQ(f.sigma2.width(), 8);
  EXPECT_EQ(f.sigma2.height(), 6);
  double mx = 0;
  for (double v : f.sigma2.samples()) {
    EXPECT_GE(v, 0.0);
    mx = std::max(mx, v);
  }
  EXPECT_EQ(f.max_sigma2, mx);
}

TEST(Estimator, IdenticalViewsGiveZero) {
  const Plane l = testing::texture(64, 48, 10);
  const Plane d = estimate_disparity(l, l, 32);
  for (double v : d.samples()) EXPECT_EQ(v, 0.0);
}

TEST(Estimator, TexturelessGivesZero) {
  const Plane d = estimate_disparity(Plane(32, 32, 50), Plane(32, 32, 50), 16);
  for (double v : d.samples()) EXPECT_EQ(v, 0.0);
}

TEST(Estimator, ShiftedViewRecoveredAndMatchesExhaustiveOracle) {
  const Plane l = testing::texture(96, 40, 11);
  const Plane r = testing::shifted(l, 7);
  const Plane d = estimate_disparity(l, r, 20);
  for (int ty = 0; ty < 40; ty += 8) {
    for (int tx = 0; tx < 96; tx += 8) {
      int best_d = 0;
      double best = oracle::sad(l, tx, ty, r, tx, ty, 8, 8);
      for (int k = 1; k <= 20; ++k) {
        const double s = oracle::sad(l, tx, ty, r, tx - k, ty, 8, 8);
        if (s < best) {
          best = s;
          best_d = k;
        }
      }
      EXPECT_EQ(d(tx, ty), best_d) << "tile " << tx << "," << ty;
      if (tx >= 8 && tx + 15 <= 96) {
        EXPECT_EQ(d(tx + 3, ty + 5), 7.0);
      }
    }
  }
}

TEST(Estimator, PartialTilesCovered) {
  const Plane l = testing::texture(20, 13, 12);
  const Plane d = estimate_disparity(l, testing::shifted(l, 3), 8);
  EXPECT_EQ(d.width(), 20);
  EXPECT_EQ(d.height(), 13);
  EXPECT_EQ(d(10, 4), 3.0);
  for (double v : d.samples()) {
    EXPECT_GE(v, 0);
    EXPECT_LE(v, 8);
  }
}

TEST(Estimator, Errors) {
  EXPECT_THROW(estimate_disparity(Plane(8, 8), Plane(8, 4), 4), DimensionError);
  EXPECT_THROW(estimate_disparity(Plane(8, 8), Plane(8, 8), 0), ValidationError);
  EXPECT_THROW(estimate_disparity(Plane(8, 8), Plane(8, 8), 129), ValidationError);
}

}  // namespace
}  // namespace hv3d
