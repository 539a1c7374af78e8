// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/report.hpp"

#include <array>
#include <charconv>

namespace hv3d {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

nlohmann::json components_to_json(const FrameComponents& c) {
  return {
      {"vif_y_right", c.vif_y_right}, {"vif_u_right", c.vif_u_right},
      {"vif_v_right", c.vif_v_right}, {"vif_y_left", c.vif_y_left},
      {"vif_u_left", c.vif_u_left},   {"vif_v_left", c.vif_v_left},
      {"vif_disparity", c.vif_disparity}, {"cyclopean", c.cyclopean},
      {"variance", c.variance},
  };
}

nlohmann::json frame_to_json(const FrameScore& f) {
  return {{"raw", f.raw},
          {"max", f.max},
          {"normalized", f.normalized},
          {"components", components_to_json(f.components)}};
}

nlohmann::json sequence_to_json(const std::string& id, const SequenceScore& s) {
  nlohmann::json frames = nlohmann::json::array();
  for (const FrameScore& f : s.per_frame) frames.push_back(frame_to_json(f));
  return {{"id", id},
          {"frames", std::move(frames)},
          {"summary",
           {{"frame_count", s.per_frame.size()},
            {"mean_normalized", s.mean_normalized},
            {"mean_raw", s.mean_raw()},
            {"mean_max", s.mean_max()},
            {"mean_components", components_to_json(s.mean_components())}}}};
}

std::string score_csv_header() {
  return "id,status,frames,mean_normalized,mean_raw,mean_max,vif_y_right,vif_u_right,vif_v_right,"
         "vif_y_left,vif_u_left,vif_v_left,vif_disparity,cyclopean,variance,mos";
}

std::string score_csv_row(const ScoreRow& row) {
  std::string out = csv_escape(row.id);
  const std::string mos = row.mos ? format_double(*row.mos) : std::string();
  if (!row.score) {
    out += ",error";
    for (int i = 0; i < 13; ++i) out += ',';
    return out + "," + mos;
  }
  const SequenceScore& s = *row.score;
  const FrameComponents c = s.mean_components();
  out += ",ok," + std::to_string(s.per_frame.size());
  for (double v : {s.mean_normalized, s.mean_raw(), s.mean_max(), c.vif_y_right, c.vif_u_right,
                   c.vif_v_right, c.vif_y_left, c.vif_u_left, c.vif_v_left, c.vif_disparity,
                   c.cyclopean, c.variance}) {
    out += ',' + format_double(v);
  }
  return out + "," + mos;
}

}  // namespace hv3d
