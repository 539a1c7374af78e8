// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hv3d/error.hpp"

namespace hv3d {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ValidationError("config: " + std::string(key) + " expects a number, got '" +
                          std::string(value) + "'");
  }
  return out;
}

int to_int(std::string_view key, std::string_view value) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ValidationError("config: " + std::string(key) + " expects an integer, got '" +
                          std::string(value) + "'");
  }
  return out;
}

}  // namespace

void HV3DConfig::validate() const {
  for (double w : {w1, w2, w3, w4}) {
    if (!(w >= 0.0)) throw ValidationError("weights must be non-negative");
  }
  if (!(w1 > 0.0 || w2 > 0.0 || w3 > 0.0 || w4 > 0.0)) {
    throw ValidationError("at least one weight must be positive");
  }
  if (!(beta > 0.0)) throw ValidationError("beta must be positive");
  if (block != 4) throw ValidationError("only 4x4 blocks are supported");
  if (window < 4) throw ValidationError("variance window must be >= 4");
  if (max_disparity < 1 || max_disparity > 128) {
    throw ValidationError("max_disp must be in [1, 128]");
  }
  geometry.validate();
  vif.validate();
}

HV3DConfig parse_config(std::string_view text, const HV3DConfig& base) {
  HV3DConfig cfg = base;
  bool window_auto = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "w1") cfg.w1 = to_double(key, value);
    else if (key == "w2") cfg.w2 = to_double(key, value);
    else if (key == "w3") cfg.w3 = to_double(key, value);
    else if (key == "w4") cfg.w4 = to_double(key, value);
    else if (key == "beta") cfg.beta = to_double(key, value);
    else if (key == "block") cfg.block = to_int(key, value);
    else if (key == "window") {
      window_auto = value == "auto";
      if (!window_auto) cfg.window = to_int(key, value);
    }
    else if (key == "d_mm") cfg.geometry.viewing_distance_mm = to_double(key, value);
    else if (key == "h_px") cfg.geometry.vertical_resolution_px = to_double(key, value);
    else if (key == "H_mm") cfg.geometry.display_height_mm = to_double(key, value);
    else if (key == "alpha_deg") cfg.geometry.half_angle_deg = to_double(key, value);
    else if (key == "vif_scales") cfg.vif.scale_count = to_int(key, value);
    else if (key == "vif_noise_var") cfg.vif.noise_variance = to_double(key, value);
    else if (key == "max_disp") cfg.max_disparity = to_int(key, value);
    else throw ValidationError("config: unknown key '" + std::string(key) + "'");
  }
  if (window_auto) {
    cfg.geometry.validate();
    cfg.window = fovea_block_size(cfg.geometry);
  }
  cfg.validate();
  return cfg;
}

HV3DConfig load_config(const std::filesystem::path& path, const HV3DConfig& base) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": cannot open config");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), base);
}

}  // namespace hv3d
