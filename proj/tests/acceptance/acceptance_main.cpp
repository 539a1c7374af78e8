// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/fixtures.hpp"
#include "../support/ladder.hpp"
#include "../support/oracles.hpp"
#include "hv3d/csf.hpp"
#include "hv3d/dct4.hpp"
#include "hv3d/disparity.hpp"
#include "hv3d/fovea.hpp"
#include "hv3d/harness.hpp"
#include "hv3d/hv3d.hpp"
#include "hv3d/manifest.hpp"
#include "hv3d/ssim.hpp"
#include "hv3d/stats.hpp"
#include "hv3d/vif.hpp"
#include "hv3d/yuv_io.hpp"

namespace {

using namespace hv3d;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int precision = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

Outcome identity_score() {
  Outcome o;
  const HV3DConfig cfg;
  const auto t0 = Clock::now();
  const auto layered = testing::stereo_clip(64, 64, 10, 11);
  const double s1 = hv3d_sequence(layered, layered, cfg).mean_normalized;
  const auto flat = testing::stereo_clip(64, 64, 10, 12, 6.0, 6.0);
  const double s2 = hv3d_sequence(flat, flat, cfg).mean_normalized;
  const double elapsed = seconds_since(t0);
  o.detail << "layered=" << fmt(s1, 15) << " constant-disparity=" << fmt(s2, 15) << " time=" << fmt(elapsed, 3)
           << "s";
  o.require(std::abs(s1 - 1.0) <= 1e-6, "layered identity");
  o.require(std::abs(s2 - 1.0) <= 1e-6, "constant-disparity identity");
  o.require(elapsed < 5.0, "runtime < 5 s");
  return o;
}

Outcome normalization_constants() {
  Outcome o;
  const HV3DConfig cfg;
  const double m0 = hv3d_max(cfg, 0.0);
  const double m1 = hv3d_max(cfg, 1.0);
  o.detail << "max(S=0)=" << fmt(m0, 17) << " max(S=1)=" << fmt(m1, 17);
  o.require(std::abs(m0 - 0.942) <= 1e-12, "S=0");
  o.require(std::abs(m1 - 0.992) <= 1e-12, "S=1");
  return o;
}

Outcome fovea_geometry() {
  Outcome o;
  DisplayGeometry g;
  g.viewing_distance_mm = 300;
  g.vertical_resolution_px = 480;
  g.display_height_mm = 68;
  g.half_angle_deg = 0.375;
  const int k = fovea_block_size(g);
  o.detail << "k=" << k << " (unrounded " << fmt(fovea_block_length_px(g), 8) << ")";
  o.require(k == 28, "k == 28");
  return o;
}

Outcome csf_mask() {
  Outcome o;
  static constexpr std::array<int, 64> jpeg = {
      16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,
      14, 13, 16, 24, 40,  57,  69,  56,  14, 17, 22, 29, 51,  87,  80,  62,
      18, 22, 37, 56, 68,  109, 103, 77,  24, 35, 55, 64, 81,  104, 113, 92,
      49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95, 98, 112, 100, 103, 99};
  std::array<double, 16> q{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const auto at = [&](int y, int x) { return jpeg[static_cast<std::size_t>(y * 8 + x)]; };
      q[static_cast<std::size_t>(r * 4 + c)] =
          (at(2 * r, 2 * c) + at(2 * r, 2 * c + 1) + at(2 * r + 1, 2 * c) + at(2 * r + 1, 2 * c + 1)) / 4.0;
    }
  }
  const CsfMask mask = build_csf_mask();
  double mean = 0.0;
  for (double c : mask.coefficients.v) mean += c / 16.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      const double lhs = mask.coefficients.v[i] / mask.coefficients.v[j];
      worst = std::max(worst, std::abs(lhs - q[j] / q[i]));
    }
  }
  const double q00 = downsampled_jpeg_table()(0, 0);
  o.detail << "mean=" << fmt(mean, 17) << " max-ratio-error=" << fmt(worst, 3) << " q00=" << fmt(q00);
  o.require(std::abs(mean - 1.0) <= 1e-12, "mean 1");
  o.require(worst <= 1e-9, "inverse proportionality");
  o.require(q00 == 12.75 && q[0] == 12.75, "q00 == 12.75");
  return o;
}

Outcome transforms() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(-255.0, 255.0);
  const auto random_block = [&] {
    Block4 b;
    for (double& x : b.v) x = uni(rng);
    return b;
  };
  double round_trip = 0.0;
  double energy = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Block4 a = random_block();
    const Block4 back = idct4(dct4(a));
    for (std::size_t k = 0; k < 16; ++k) round_trip = std::max(round_trip, std::abs(back.v[k] - a.v[k]));
    const Block4 b = random_block();
    const FusedPair p = fuse_blocks_full(a, b);
    const double lhs = oracle::sum_of_squares(p.low) + oracle::sum_of_squares(p.high);
    const double rhs = oracle::sum_of_squares(a) + oracle::sum_of_squares(b);
    energy = std::max(energy, std::abs(lhs - rhs) / std::max(1.0, rhs));
  }
  o.detail << "max round-trip error=" << fmt(round_trip, 3) << " max relative energy error=" << fmt(energy, 3);
  o.require(round_trip <= 1e-9, "idct(dct(A)) == A");
  o.require(energy <= 1e-9, "energy split");
  return o;
}

Outcome kernel_oracles() {
  Outcome o;
  const double c1 = (0.01 * 255) * (0.01 * 255);
  const double closed = (2 * 100.0 * 110.0 + c1) / (100.0 * 100.0 + 110.0 * 110.0 + c1);
  const double s = ssim_block(Block4::filled(100), Block4::filled(110));

  const Plane a = testing::texture(96, 80, 3);
  const double v = vif(a, a);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uni(0.0, 64.0);
  Plane raw(160, 120);
  for (double& x : raw.samples()) x = std::round(uni(rng));
  const NormalizedDisparity nd = normalize_disparity(raw);
  const int blocks = block_count(nd.plane);
  std::uniform_int_distribution<int> pick(0, blocks - 1);
  const int grid_w = nd.plane.width() / 4;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int b = pick(rng);
    const double got = block_disparity_variance(nd, b, 28);
    const double want = oracle::window_variance(nd.plane, (b % grid_w) * 4 - 12, (b / grid_w) * 4 - 12, 28);
    worst = std::max(worst, std::abs(got - want));
  }
  o.detail << "ssim=" << fmt(s, 10) << " (closed form " << fmt(closed, 10) << ") vif(a,a)=" << fmt(v, 15)
           << " variance max error=" << fmt(worst, 3);
  o.require(std::abs(s - closed) <= 1e-6 && std::abs(s - 0.995477) <= 1e-6, "ssim constant shift");
  o.require(std::abs(v - 1.0) <= 1e-9, "vif(a,a) == 1");
  o.require(worst <= 1e-12, "window variance oracle");
  return o;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

void ladder(Outcome& o, const char* name, DistortionKind kind, const std::vector<double>& mags) {
  const auto t0 = Clock::now();
  const auto scores = testing::ladder_scores(kind, mags, 96, 96, 3);
  const double elapsed = seconds_since(t0);
  o.detail << " " << name << "={";
  for (std::size_t i = 0; i < scores.size(); ++i) o.detail << (i ? "," : "") << fmt(scores[i], 6);
  o.detail << "} " << fmt(elapsed, 3) << "s";
  o.require(strictly_decreasing(scores), std::string(name) + " strictly decreasing");
  o.require(elapsed < 30.0, std::string(name) + " runtime < 30 s");
}

Outcome monotonicity() {
  Outcome o;
  ladder(o, "awgn", DistortionKind::kAwgn, {0, 5, 10, 20, 40});
  ladder(o, "blur", DistortionKind::kGaussianBlur, {0, 0.5, 1, 2, 4});
  ladder(o, "shift", DistortionKind::kMeanShift, {0, 8, 16, 32});
  return o;
}

void write_clip_files(const std::vector<StereoFrame>& clip, const std::filesystem::path& left,
                      const std::filesystem::path& right) {
  std::vector<Frame> l, r;
  for (const StereoFrame& s : clip) {
    l.push_back(s.left);
    r.push_back(s.right);
  }
  write_yuv420(left, l);
  write_yuv420(right, r);
}

// Writes a 5-rung AWGN ladder with MOS falling as noise grows.
std::filesystem::path write_ladder_manifest(const testing::TempDir& dir) {
  const auto clip = testing::stereo_clip(64, 64, 2, 21);
  write_clip_files(clip, dir / "ref_l.yuv", dir / "ref_r.yuv");
  const std::array<double, 5> sigmas = {0.0, 4.0, 10.0, 20.0, 40.0};
  const std::array<double, 5> mos = {4.8, 4.1, 3.2, 2.2, 1.1};
  std::ofstream m(dir / "manifest.csv");
  m << kManifestHeader << "\n";
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    std::vector<StereoFrame> dist;
    for (std::size_t f = 0; f < clip.size(); ++f) {
      StereoFrame s;
      s.left = awgn(clip[f].left, sigmas[i], 42, 2 * f);
      s.right = awgn(clip[f].right, sigmas[i], 42, 2 * f + 1);
      dist.push_back(std::move(s));
    }
    const std::string tag = "rung" + std::to_string(i);
    write_clip_files(dist, dir / (tag + "_l.yuv"), dir / (tag + "_r.yuv"));
    m << tag << ",ref_l.yuv,ref_r.yuv,auto," << tag << "_l.yuv," << tag << "_r.yuv,auto,64,64,2," << mos[i]
      << "\n";
  }
  return dir / "manifest.csv";
}

Outcome statistics() {
  Outcome o;
  const std::vector<double> x = {1, 2, 3}, y = {3, 1, 2};
  const double rho = spearman(x, y);

  const std::array<double, 4> truth = {1.0, 3.5, 0.8, 0.55};
  std::vector<double> obj, mos;
  for (int i = 0; i < 12; ++i) {
    obj.push_back(-3.0 + 0.5 * i);
    mos.push_back(logistic4(truth, obj.back()));
  }
  const LogisticFit fit = logistic_fit(obj, mos);

  testing::TempDir dir("accept_stats");
  const Manifest manifest = load_manifest(write_ladder_manifest(dir));
  const BatchReport report = run_manifest(manifest, HV3DConfig{});
  const double ladder_rho = report.correlation ? report.correlation->spearman_rho : std::nan("");

  o.detail << "spearman=" << fmt(rho, 17) << " fit rms=" << fmt(fit.rms_residual, 3) << " ladder rho="
           << fmt(ladder_rho, 17);
  o.require(rho == -0.5, "spearman([1,2,3],[3,1,2]) == -0.5");
  o.require(fit.rms_residual < 1e-6, "logistic round trip");
  o.require(ladder_rho == 1.0, "ladder rho == 1");
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  testing::TempDir dir("accept_batch");
  const auto manifest = write_ladder_manifest(dir);
  std::array<std::string, 2> csv;
  for (int run = 0; run < 2; ++run) {
    const auto out = dir / ("out" + std::to_string(run));
    const std::string cmd = std::string("\"") + HV3D_CLI_PATH + "\" batch --manifest \"" + manifest.string() +
                            "\" --out \"" + out.string() + "\" 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    o.require(rc == 0, "batch run " + std::to_string(run) + " exit 0");
    csv[static_cast<std::size_t>(run)] = slurp(out / "scores.csv");
  }
  o.detail << "scores.csv " << csv[0].size() << " bytes";
  o.require(!csv[0].empty(), "scores.csv written");
  o.require(csv[0] == csv[1], "byte-identical scores.csv");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 identity score", identity_score},
      {"2 normalization constants", normalization_constants},
      {"3 fovea geometry", fovea_geometry},
      {"4 csf mask", csf_mask},
      {"5 transform correctness", transforms},
      {"6 kernel oracles", kernel_oracles},
      {"7 monotonicity", monotonicity},
      {"8 statistics", statistics},
      {"9 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
