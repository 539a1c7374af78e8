// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <span>
#include <vector>

namespace hv3d {

/// 1-based fractional ranks; tied values share the mean of their positions.
std::vector<double> fractional_ranks(std::span<const double> values);

/// Pearson correlation; 0 when either input has zero variance.
/// Throws ValidationError on length mismatch or fewer than 2 samples.
double pearson(std::span<const double> x, std::span<const double> y);

/// Spearman rank correlation (Pearson of fractional ranks).
/// Throws ValidationError on length mismatch or n < 3.
double spearman(std::span<const double> x, std::span<const double> y);

/// y = a + b / (1 + exp(-c (x - d))).
double logistic4(const std::array<double, 4>& params, double x);

struct LogisticFit {
  std::array<double, 4> params{};  // a, b, c, d
  std::vector<double> fitted;
  double rms_residual = 0.0;
  double pearson_after_fit = 0.0;  // Pearson(fitted, mos)
  bool converged = false;
  int iterations = 0;
};

struct LogisticFitOptions {
  int max_iterations = 2000;
  double tolerance = 1e-15;  // relative SSE decrease that counts as converged
};

/// Levenberg-Marquardt least-squares fit of the 4-parameter logistic.
///
/// Starts from a = min(mos), b = max(mos) - min(mos), c = 1,
/// d = median(objective). Requires n >= 5 (ValidationError otherwise).
/// When the iteration cap is hit the best parameters found are returned with
/// converged = false.
LogisticFit logistic_fit(std::span<const double> objective, std::span<const double> mos,
                         const LogisticFitOptions& options = {});

}  // namespace hv3d
