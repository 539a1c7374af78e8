// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hv3d/hv3d.hpp"

namespace hv3d {

/// Shortest decimal that parses back to exactly `v`.
std::string format_double(double v);

nlohmann::json components_to_json(const FrameComponents& c);
nlohmann::json frame_to_json(const FrameScore& f);

/// {"id", "frames": [...], "summary": {...}} for one scored sequence.
nlohmann::json sequence_to_json(const std::string& id, const SequenceScore& s);

/// One scored (or failed) sequence as it appears in scores.csv.
struct ScoreRow {
  std::string id;
  std::optional<SequenceScore> score;  // empty when scoring failed
  std::optional<double> mos;
  std::string error;
};

std::string score_csv_header();
std::string score_csv_row(const ScoreRow& row);

}  // namespace hv3d
