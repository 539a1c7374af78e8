// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hv3d/config.hpp"
#include "hv3d/hv3d.hpp"
#include "hv3d/manifest.hpp"
#include "hv3d/stats.hpp"

namespace hv3d {

struct EntryResult {
  std::string id;
  std::optional<SequenceScore> score;  // empty when the entry failed
  std::optional<double> mos;
  std::string error;
};

struct FitPoint {
  std::string id;
  double objective = 0.0;
  double mos = 0.0;
  std::optional<double> fitted;
};

/// Agreement between objective scores and MOS over the entries that scored.
struct CorrelationReport {
  std::size_t sample_count = 0;
  double spearman_rho = 0.0;
  double pearson_raw = 0.0;
  std::optional<LogisticFit> fit;  // needs at least 5 samples
  std::vector<FitPoint> points;
};

struct BatchReport {
  std::vector<EntryResult> entries;  // manifest order
  std::optional<CorrelationReport> correlation;
};

/// Scores every entry (up to `threads` entries at once). Failures are kept
/// with their message and left out of the statistics; correlation is computed
/// when the manifest carries MOS and at least 3 entries succeeded.
BatchReport run_manifest(const Manifest& manifest, const HV3DConfig& cfg, unsigned threads = 0);

/// Correlation over (objective, MOS) pairs; nullopt below 3 samples.
std::optional<CorrelationReport> correlate(const std::vector<FitPoint>& points);

nlohmann::json batch_to_json(const BatchReport& report);

/// Writes scores.csv, report.json and fit_points.csv into `out_dir` (created if missing).
void write_batch_reports(const std::filesystem::path& out_dir, const BatchReport& report);

}  // namespace hv3d
