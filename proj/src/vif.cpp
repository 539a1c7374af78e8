// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/vif.hpp"

#include <cmath>
#include <numeric>

#include "hv3d/error.hpp"
#include "hv3d/filter.hpp"

namespace hv3d {
namespace {

struct InformationTerms {
  double num = 0.0;
  double den = 0.0;
};

// Accumulates log(1 + g^2 s1 / (sv + sn)) and log(1 + s1 / sn) over one scale.
InformationTerms scale_terms(const Plane& ref, const Plane& dist, std::span<const double> window,
                             const VifParams& p) {
  const Plane mu1 = convolve_separable(ref, window);
  const Plane mu2 = convolve_separable(dist, window);
  const Plane e11 = convolve_separable(multiply(ref, ref), window);
  const Plane e22 = convolve_separable(multiply(dist, dist), window);
  const Plane e12 = convolve_separable(multiply(ref, dist), window);

  const double eps = p.epsilon;
  InformationTerms t;
  const std::size_t n = ref.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double m1 = mu1.samples()[i];
    const double m2 = mu2.samples()[i];
    double s1 = std::max(e11.samples()[i] - m1 * m1, 0.0);
    const double s2 = std::max(e22.samples()[i] - m2 * m2, 0.0);
    const double s12 = e12.samples()[i] - m1 * m2;

    double g = s12 / (s1 + eps);
    double sv = s2 - g * s12;
    if (s1 < eps) {
      g = 0.0;
      sv = s2;
      s1 = 0.0;
    }
    if (s2 < eps) {
      g = 0.0;
      sv = 0.0;
    }
    if (g < 0.0) {
      sv = s2;
      g = 0.0;
    }
    sv = std::max(sv, eps);

    t.num += std::log1p(g * g * s1 / (sv + p.noise_variance));
    t.den += std::log1p(s1 / p.noise_variance);
  }
  return t;
}

}  // namespace

void VifParams::validate() const {
  if (scale_count < 1) throw ValidationError("VIF scale count must be >= 1");
  if (!(noise_variance > 0.0)) throw ValidationError("VIF noise variance must be > 0");
  if (!(epsilon > 0.0)) throw ValidationError("VIF epsilon must be > 0");
  if (window < 1 || window % 2 == 0) throw ValidationError("VIF window must be odd and >= 1");
  if (!(window_sigma > 0.0)) throw ValidationError("VIF window sigma must be > 0");
}

int effective_scale_count(const Plane& plane, const VifParams& p) {
  const int min_dim = std::min(plane.width(), plane.height());
  int scales = p.scale_count;
  while (scales > 1 && min_dim < (1 << scales)) --scales;
  return scales;
}

double vif_ratio(const Plane& ref, const Plane& dist, const VifParams& p) {
  p.validate();
  if (!ref.same_shape(dist)) {
    throw DimensionError("VIF operands differ: " + std::to_string(ref.width()) + "x" +
                         std::to_string(ref.height()) + " vs " + std::to_string(dist.width()) +
                         "x" + std::to_string(dist.height()));
  }
  if (ref.empty()) throw DimensionError("VIF of empty planes");
  if (is_constant(ref)) return is_constant(dist) ? 1.0 : 0.0;

  // Statistics are mean-removed, so offsetting both planes by the reference
  // mean changes nothing mathematically and keeps E[x^2] - mu^2 well conditioned.
  const auto rs = ref.samples();
  const double offset = std::accumulate(rs.begin(), rs.end(), 0.0) / static_cast<double>(rs.size());
  Plane r = ref;
  Plane d = dist;
  for (double& v : r.samples()) v -= offset;
  for (double& v : d.samples()) v -= offset;

  const auto window = gaussian_taps(p.window_sigma, p.window / 2);
  const int scales = effective_scale_count(ref, p);
  InformationTerms total;
  for (int s = 0; s < scales; ++s) {
    if (s > 0) {
      r = decimate2(convolve_separable(r, window));
      d = decimate2(convolve_separable(d, window));
    }
    const InformationTerms t = scale_terms(r, d, window, p);
    total.num += t.num;
    total.den += t.den;
  }
  if (!(total.den > 0.0)) return is_constant(dist) ? 1.0 : 0.0;
  return total.num / total.den;
}

double vif(const Plane& ref, const Plane& dist, const VifParams& p) {
  return std::clamp(vif_ratio(ref, dist, p), 0.0, 1.0);
}

}  // namespace hv3d
