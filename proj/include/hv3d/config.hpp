// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hv3d/fovea.hpp"
#include "hv3d/vif.hpp"

namespace hv3d {

/// Weights and geometry of the metric. Defaults reproduce the mobile setup.
struct HV3DConfig {
  double w1 = 0.14;    // luma VIF, per view
  double w2 = 0.1208;  // cyclopean SSIM
  double w3 = 0.05;    // disparity variance
  double w4 = 0.1353;  // chroma VIF, per plane
  double beta = 0.7;   // exponent on VIF(D, D')
  int block = 4;
  int window = 28;
  DisplayGeometry geometry;
  VifParams vif;
  int max_disparity = 32;  // search range when disparity is estimated

  void validate() const;
};

/// Parses `key=value` lines; '#' starts a comment, blank lines are ignored.
///
/// Keys: w1 w2 w3 w4 beta window (integer or "auto" = fovea_block_size of the
/// geometry) block d_mm h_px H_mm alpha_deg vif_scales vif_noise_var max_disp.
/// Keys not present keep the values of `base`. `window=auto` is resolved after
/// all geometry keys are applied. Unknown keys or malformed values raise
/// ValidationError; the result is validated.
HV3DConfig parse_config(std::string_view text, const HV3DConfig& base = {});

HV3DConfig load_config(const std::filesystem::path& path, const HV3DConfig& base = {});

}  // namespace hv3d
