// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "hv3d/distort.hpp"
#include "hv3d/error.hpp"

namespace hv3d {
namespace {

std::pair<double, double> range(const Plane& p) {
  const auto s = p.samples();
  return {*std::min_element(s.begin(), s.end()), *std::max_element(s.begin(), s.end())};
}

void expect_same_layout(const Frame& a, const Frame& b) {
  EXPECT_TRUE(a.y.same_shape(b.y));
  EXPECT_TRUE(a.u.same_shape(b.u));
  EXPECT_TRUE(a.v.same_shape(b.v));
}

TEST(Awgn, ZeroSigmaIsIdentity) {
  const Frame f = testing::textured_frame(32, 16, 1);
  EXPECT_EQ(awgn(f, 0.0, 42), f);
}

TEST(Awgn, DeterministicPerSeedAndStream) {
  const Frame f = testing::textured_frame(32, 16, 2);
  EXPECT_EQ(awgn(f, 10, 42, 3), awgn(f, 10, 42, 3));
  EXPECT_NE(awgn(f, 10, 42, 3), awgn(f, 10, 43, 3));
  EXPECT_NE(awgn(f, 10, 42, 3), awgn(f, 10, 42, 4));
}

TEST(Awgn, SampleStandardDeviationOnLargePlane) {
  const Frame f = Frame::filled(480, 800, 128, 128);
  const Frame n = awgn(f, 10, 7);
  double sum = 0, sq = 0;
  const auto s = n.y.samples();
  for (double v : s) sum += v;
  const double mean = sum / static_cast<double>(s.size());
  for (double v : s) sq += (v - mean) * (v - mean);
  const double sd = std::sqrt(sq / static_cast<double>(s.size() - 1));
  EXPECT_NEAR(sd, 10.0, 0.2);
  EXPECT_NEAR(mean, 128.0, 0.1);
  const auto [lo, hi] = range(n.u);
  EXPECT_LT(lo, 128);
  EXPECT_GT(hi, 128);
}

TEST(Awgn, ClampedToByteRange) {
  const Frame n = awgn(Frame::filled(64, 64, 250, 3), 40, 1);
  for (const Plane* p : {&n.y, &n.u, &n.v}) {
    const auto [lo, hi] = range(*p);
    EXPECT_GE(lo, 0.0);
    EXPECT_LE(hi, 255.0);
  }
  EXPECT_THROW(awgn(n, -1, 1), ValidationError);
}

TEST(Blur, ZeroSigmaIsIdentity) {
  const Frame f = testing::textured_frame(32, 16, 3);
  EXPECT_EQ(gaussian_blur(f, 0.0), f);
}

TEST(Blur, ConstantPlaneUnchanged) {
  const Frame f = Frame::filled(40, 20, 77, 33);
  EXPECT_EQ(gaussian_blur(f, 2.5), f);
}

TEST(Blur, ImpulseResponseIsNormalizedKernel) {
  Frame f = Frame::filled(32, 32, 0, 0);
  f.y(15, 15) = 1.0;
  const Frame b = gaussian_blur(f, 1.0);
  for (int y = 0; y < f.y.height(); ++y) {
    for (int x = 0; x < f.y.width(); ++x) {
      const int dx = x - 15, dy = y - 15;
      const double want = (std::abs(dx) <= 3 && std::abs(dy) <= 3) ? oracle::gaussian_2d(dx, dy, 1.0, 3) : 0.0;
      EXPECT_NEAR(b.y(x, y), want, 1e-15);
    }
  }
}

TEST(Blur, NeverWidensRange) {
  for (double sigma : {0.3, 0.5, 1.0, 2.0, 4.0, 10.0}) {
    const Frame f = testing::textured_frame(48, 32, 4);
    const Frame b = gaussian_blur(f, sigma);
    for (auto [p, q] : {std::pair{&f.y, &b.y}, {&f.u, &b.u}, {&f.v, &b.v}}) {
      const auto [lo0, hi0] = range(*p);
      const auto [lo1, hi1] = range(*q);
      EXPECT_GE(lo1, lo0);
      EXPECT_LE(hi1, hi0);
    }
  }
  EXPECT_THROW(gaussian_blur(Frame::filled(4, 4, 0), -0.1), ValidationError);
}

TEST(Shift, LumaOnlyWithSaturation) {
  const Frame f = Frame::filled(8, 8, 100, 60);
  EXPECT_EQ(mean_shift(f, 0.0), f);
  const Frame up = mean_shift(f, 10);
  for (double v : up.y.samples()) EXPECT_EQ(v, 110);
  EXPECT_EQ(up.u, f.u);
  EXPECT_EQ(up.v, f.v);
  const Frame sat = mean_shift(Frame::filled(8, 8, 250), 10);
  for (double v : sat.y.samples()) EXPECT_EQ(v, 255);
  const Frame down = mean_shift(Frame::filled(8, 8, 5), -10);
  for (double v : down.y.samples()) EXPECT_EQ(v, 0);
  EXPECT_THROW(mean_shift(f, 129), ValidationError);
}

TEST(Distortions, PreserveLayout) {
  const Frame f = testing::textured_frame(24, 16, 5);
  expect_same_layout(f, awgn(f, 5, 1));
  expect_same_layout(f, gaussian_blur(f, 1.5));
  expect_same_layout(f, mean_shift(f, -12));
}

TEST(SpecGrammar, ParsesAllKinds) {
  const DistortionSpec a = parse_distortion_spec("awgn:10:42");
  EXPECT_EQ(a.kind, DistortionKind::kAwgn);
  EXPECT_EQ(a.magnitude, 10);
  EXPECT_EQ(a.seed, 42u);
  EXPECT_EQ(parse_distortion_spec("awgn:2.5").seed, 0u);
  const DistortionSpec b = parse_distortion_spec("blur:1.5");
  EXPECT_EQ(b.kind, DistortionKind::kGaussianBlur);
  EXPECT_EQ(b.magnitude, 1.5);
  const DistortionSpec s = parse_distortion_spec("shift:-12");
  EXPECT_EQ(s.kind, DistortionKind::kMeanShift);
  EXPECT_EQ(s.magnitude, -12);
  for (const char* text : {"awgn:10:42", "blur:1.5", "shift:-12"}) {
    EXPECT_EQ(to_string(parse_distortion_spec(text)), text);
  }
}

TEST(SpecGrammar, RejectsMalformedAndOutOfRange) {
  for (const char* text : {"", "awgn", "noise:5", "awgn:x", "awgn:5:", "awgn:5:-1", "blur:1:3", "blur:11",
                           "shift:200", "awgn:-1", "blur:-0.5", "awgn:5:4:3", "shift:nan"}) {
    EXPECT_THROW(parse_distortion_spec(text), ValidationError) << text;
  }
}

TEST(SpecGrammar, ApplyDispatches) {
  const Frame f = testing::textured_frame(16, 16, 6);
  EXPECT_EQ(apply_distortion(f, parse_distortion_spec("awgn:4:9"), 2), awgn(f, 4, 9, 2));
  EXPECT_EQ(apply_distortion(f, parse_distortion_spec("blur:2")), gaussian_blur(f, 2));
  EXPECT_EQ(apply_distortion(f, parse_distortion_spec("shift:7")), mean_shift(f, 7));
}

}  // namespace
}  // namespace hv3d
