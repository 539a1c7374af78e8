// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/stats.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hv3d/error.hpp"

namespace hv3d {
namespace {

void require_pair(std::span<const double> x, std::span<const double> y, std::size_t min_n,
                  const char* what) {
  if (x.size() != y.size()) {
    throw ValidationError(std::string(what) + ": length mismatch (" + std::to_string(x.size()) +
                          " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < min_n) {
    throw ValidationError(std::string(what) + ": need at least " + std::to_string(min_n) +
                          " samples, got " + std::to_string(x.size()));
  }
}

// Numerically stable 1 / (1 + exp(-z)).
double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double sum_squared_residuals(const std::array<double, 4>& p, std::span<const double> x,
                             std::span<const double> y) {
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - logistic4(p, x[i]);
    sse += r * r;
  }
  return sse;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<double> fractional_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 (0-based) share rank mean((i+1)..j).
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  require_pair(x, y, 2, "pearson");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) return 0.0;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  require_pair(x, y, 3, "spearman");
  const auto rx = fractional_ranks(x);
  const auto ry = fractional_ranks(y);
  return pearson(rx, ry);
}

double logistic4(const std::array<double, 4>& p, double x) {
  return p[0] + p[1] * sigmoid(p[2] * (x - p[3]));
}

LogisticFit logistic_fit(std::span<const double> objective, std::span<const double> mos,
                         const LogisticFitOptions& options) {
  require_pair(objective, mos, 5, "logistic_fit");
  const std::size_t n = objective.size();
  const auto [lo, hi] = std::minmax_element(mos.begin(), mos.end());

  std::array<double, 4> p{*lo, *hi - *lo, 1.0, median({objective.begin(), objective.end()})};
  double sse = sum_squared_residuals(p, objective, mos);
  double lambda = 1e-3;

  LogisticFit fit;
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(n), 4);
  Eigen::VectorXd res(static_cast<Eigen::Index>(n));
  int it = 0;
  for (; it < options.max_iterations && !fit.converged; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = static_cast<Eigen::Index>(i);
      const double u = objective[i] - p[3];
      const double s = sigmoid(p[2] * u);
      const double ds = s * (1.0 - s);
      jac(row, 0) = 1.0;
      jac(row, 1) = s;
      jac(row, 2) = p[1] * ds * u;
      jac(row, 3) = -p[1] * ds * p[2];
      res(row) = mos[i] - (p[0] + p[1] * s);
    }
    const Eigen::Matrix4d normal = jac.transpose() * jac;
    const Eigen::Vector4d grad = jac.transpose() * res;
    if (sse <= 1e-30 * static_cast<double>(n) || grad.cwiseAbs().maxCoeff() <= 1e-300) {
      fit.converged = true;
      break;
    }

    // Marquardt damping: inflate the diagonal until a step lowers the SSE.
    bool accepted = false;
    while (!accepted) {
      Eigen::Matrix4d damped = normal;
      for (int k = 0; k < 4; ++k) damped(k, k) += lambda * std::max(normal(k, k), 1e-12);
      const Eigen::Vector4d step = damped.ldlt().solve(grad);
      if (!step.allFinite()) {
        lambda *= 10.0;
      } else {
        const std::array<double, 4> trial{p[0] + step(0), p[1] + step(1), p[2] + step(2),
                                          p[3] + step(3)};
        const double trial_sse = sum_squared_residuals(trial, objective, mos);
        if (std::isfinite(trial_sse) && trial_sse < sse) {
          const double decrease = (sse - trial_sse) / std::max(sse, 1e-300);
          p = trial;
          sse = trial_sse;
          lambda = std::max(lambda / 3.0, 1e-15);
          accepted = true;
          if (decrease < options.tolerance) fit.converged = true;
        } else {
          lambda *= 4.0;
        }
      }
      if (lambda > 1e20) {
        // No descent direction left: a stationary point for this data.
        fit.converged = true;
        break;
      }
    }
  }

  fit.params = p;
  fit.iterations = it;
  fit.fitted.resize(n);
  for (std::size_t i = 0; i < n; ++i) fit.fitted[i] = logistic4(p, objective[i]);
  fit.rms_residual = std::sqrt(sse / static_cast<double>(n));
  fit.pearson_after_fit = pearson(fit.fitted, mos);
  return fit;
}

}  // namespace hv3d
