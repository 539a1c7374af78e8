// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/harness.hpp"

#include <fstream>

#include "hv3d/error.hpp"
#include "hv3d/parallel.hpp"
#include "hv3d/report.hpp"
#include "hv3d/sequence.hpp"

namespace hv3d {
namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw IoError(path.string() + ": write failed");
}

}  // namespace

BatchReport run_manifest(const Manifest& manifest, const HV3DConfig& cfg, unsigned threads) {
  cfg.validate();
  BatchReport report;
  report.entries.resize(manifest.entries.size());
  parallel_for(manifest.entries.size(), threads, [&](std::size_t i) {
    const ManifestEntry& e = manifest.entries[i];
    EntryResult& r = report.entries[i];
    r.id = e.id;
    r.mos = e.mos;
    try {
      r.score = score_sequence_files(e.ref, e.dist, cfg, 1);
    } catch (const std::exception& ex) {
      r.error = ex.what();
    }
  });

  if (manifest.has_mos()) {
    std::vector<FitPoint> points;
    for (const EntryResult& r : report.entries) {
      if (r.score) points.push_back({r.id, r.score->mean_normalized, *r.mos, std::nullopt});
    }
    report.correlation = correlate(points);
  }
  return report;
}

std::optional<CorrelationReport> correlate(const std::vector<FitPoint>& points) {
  if (points.size() < 3) return std::nullopt;
  std::vector<double> objective;
  std::vector<double> mos;
  for (const FitPoint& p : points) {
    objective.push_back(p.objective);
    mos.push_back(p.mos);
  }
  CorrelationReport c;
  c.sample_count = points.size();
  c.spearman_rho = spearman(objective, mos);
  c.pearson_raw = pearson(objective, mos);
  c.points = points;
  if (points.size() >= 5) {
    c.fit = logistic_fit(objective, mos);
    for (std::size_t i = 0; i < points.size(); ++i) c.points[i].fitted = c.fit->fitted[i];
  }
  return c;
}

nlohmann::json batch_to_json(const BatchReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const EntryResult& r : report.entries) {
    nlohmann::json e;
    if (r.score) {
      e = sequence_to_json(r.id, *r.score);
      e["status"] = "ok";
    } else {
      e = {{"id", r.id}, {"status", "error"}, {"error", r.error}};
    }
    e["mos"] = r.mos ? nlohmann::json(*r.mos) : nlohmann::json(nullptr);
    entries.push_back(std::move(e));
  }
  nlohmann::json doc = {{"entries", std::move(entries)}};
  if (report.correlation) {
    const CorrelationReport& c = *report.correlation;
    nlohmann::json corr = {{"sample_count", c.sample_count},
                           {"spearman_rho", c.spearman_rho},
                           {"pearson_raw", c.pearson_raw}};
    if (c.fit) {
      corr["logistic"] = {{"a", c.fit->params[0]},
                          {"b", c.fit->params[1]},
                          {"c", c.fit->params[2]},
                          {"d", c.fit->params[3]},
                          {"converged", c.fit->converged},
                          {"iterations", c.fit->iterations},
                          {"rms_residual", c.fit->rms_residual},
                          {"pearson_r_after_fit", c.fit->pearson_after_fit}};
    }
    nlohmann::json pts = nlohmann::json::array();
    for (const FitPoint& p : c.points) {
      pts.push_back({{"id", p.id},
                     {"objective", p.objective},
                     {"mos", p.mos},
                     {"fitted", p.fitted ? nlohmann::json(*p.fitted) : nlohmann::json(nullptr)}});
    }
    corr["points"] = std::move(pts);
    doc["correlation"] = std::move(corr);
  }
  return doc;
}

void write_batch_reports(const std::filesystem::path& out_dir, const BatchReport& report) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir.string() + ": " + ec.message());

  std::string csv = score_csv_header() + "\n";
  for (const EntryResult& r : report.entries) {
    csv += score_csv_row({r.id, r.score, r.mos, r.error}) + "\n";
  }
  write_text(out_dir / "scores.csv", csv);
  write_text(out_dir / "report.json", batch_to_json(report).dump(2) + "\n");

  std::string points = "objective,mos,fitted\n";
  if (report.correlation) {
    for (const FitPoint& p : report.correlation->points) {
      points += format_double(p.objective) + "," + format_double(p.mos) + "," +
                (p.fitted ? format_double(*p.fitted) : std::string()) + "\n";
    }
  }
  write_text(out_dir / "fit_points.csv", points);
}

}  // namespace hv3d
