// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>

#include "hv3d/config.hpp"
#include "hv3d/csf.hpp"
#include "hv3d/disparity.hpp"
#include "hv3d/distort.hpp"
#include "hv3d/error.hpp"
#include "hv3d/harness.hpp"
#include "hv3d/pgm_io.hpp"
#include "hv3d/report.hpp"
#include "hv3d/sequence.hpp"
#include "hv3d/simd/kernels.hpp"

namespace hv3d::cli {
namespace {

struct ScoreFlags {
  std::string ref_left, ref_right, dist_left, dist_right;
  std::string ref_disp = "auto";
  std::string dist_disp = "auto";
  int width = 0, height = 0, frames = 0;
  std::string config;
  std::string out;
  std::string id = "sequence";
  unsigned threads = 0;
  int max_disp = 0;
};

struct DistortFlags {
  std::string in, out, spec;
  int width = 0, height = 0, frames = 0;
};

struct EstimateFlags {
  std::string left, right, out;
  int width = 0, height = 0, frames = 0;
  int max_disp = 32;
};

struct BatchFlags {
  std::string manifest, out, config;
  unsigned threads = 0;
  int max_disp = 0;
};

SequenceSpec make_spec(const std::string& left, const std::string& right, const std::string& disp,
                       int w, int h, int frames) {
  SequenceSpec s;
  s.left = left;
  s.right = right;
  s.width = w;
  s.height = h;
  s.frame_count = frames;
  if (disp == "auto") {
    s.disparity_mode = DisparityMode::kEstimate;
  } else {
    s.disparity_mode = DisparityMode::kSupplied;
    s.disparity = disp;
  }
  s.validate();
  return s;
}

HV3DConfig resolve_config(const std::string& path, int max_disp) {
  HV3DConfig cfg = path.empty() ? HV3DConfig{} : load_config(path);
  if (max_disp != 0) cfg.max_disparity = max_disp;
  cfg.validate();
  return cfg;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError(path.string() + ": cannot open for writing");
  f << text;
  if (!f) throw IoError(path.string() + ": write failed");
}

void cmd_score(const ScoreFlags& f, std::ostream& out, std::ostream& err) {
  const HV3DConfig cfg = resolve_config(f.config, f.max_disp);
  const SequenceSpec ref = make_spec(f.ref_left, f.ref_right, f.ref_disp, f.width, f.height, f.frames);
  const SequenceSpec dist =
      make_spec(f.dist_left, f.dist_right, f.dist_disp, f.width, f.height, f.frames);
  err << "scoring " << f.frames << " frame(s) " << f.width << "x" << f.height << " ["
      << simd::isa_name(simd::kernels().isa) << " kernels]\n";
  const SequenceScore score = score_sequence_files(ref, dist, cfg, f.threads);
  if (!f.out.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(f.out, ec);
    if (ec) throw IoError(f.out + ": " + ec.message());
    write_file(std::filesystem::path(f.out) / "report.json", sequence_to_json(f.id, score).dump(2) + "\n");
    write_file(std::filesystem::path(f.out) / "score.csv",
               score_csv_header() + "\n" + score_csv_row({f.id, score, std::nullopt, {}}) + "\n");
    err << "wrote " << f.out << "/report.json and score.csv\n";
  }
  char line[64];
  std::snprintf(line, sizeof line, "%.6f", score.mean_normalized);
  out << line << "\n";
}

void cmd_distort(const DistortFlags& f, std::ostream& err) {
  const DistortionSpec spec = parse_distortion_spec(f.spec);
  if (f.frames < 1) throw ValidationError("--frames must be >= 1");
  frame_bytes_420(f.width, f.height);
  const auto frames = read_yuv420(f.in, f.width, f.height, f.frames);
  std::vector<Frame> distorted;
  distorted.reserve(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    distorted.push_back(apply_distortion(frames[i], spec, i));
  }
  write_yuv420(f.out, distorted);
  err << "wrote " << distorted.size() << " frame(s) with " << to_string(spec) << " to " << f.out << "\n";
}

void cmd_estimate(const EstimateFlags& f, std::ostream& err) {
  if (f.frames < 1) throw ValidationError("--frames must be >= 1");
  if (f.max_disp < 1 || f.max_disp > 128) throw ValidationError("--max-disp must be in [1, 128]");
  if (f.frames > 1 && disparity_path_for_frame(f.out, 0) == disparity_path_for_frame(f.out, 1)) {
    throw ValidationError("--out needs a %d or %0Nd frame index for multi-frame input");
  }
  frame_bytes_420(f.width, f.height);
  for (int i = 0; i < f.frames; ++i) {
    const Frame left = read_yuv420_frame(f.left, f.width, f.height, i);
    const Frame right = read_yuv420_frame(f.right, f.width, f.height, i);
    write_pgm(disparity_path_for_frame(f.out, i), estimate_disparity(left.y, right.y, f.max_disp));
  }
  err << "wrote " << f.frames << " disparity map(s)\n";
}

void cmd_batch(const BatchFlags& f, std::ostream& err) {
  const HV3DConfig cfg = resolve_config(f.config, f.max_disp);
  const Manifest manifest = load_manifest(f.manifest);
  const BatchReport report = run_manifest(manifest, cfg, f.threads);
  write_batch_reports(f.out, report);
  std::size_t failed = 0;
  for (const EntryResult& r : report.entries) {
    if (!r.score) {
      ++failed;
      err << "entry " << r.id << " failed: " << r.error << "\n";
    }
  }
  err << "scored " << report.entries.size() - failed << "/" << report.entries.size() << " entries";
  if (report.correlation) err << ", spearman " << report.correlation->spearman_rho;
  err << "\n";
}

void cmd_mask_dump(std::ostream& out) {
  const CsfMask mask = build_csf_mask();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (c) out << ',';
      out << format_double(mask.coefficients(r, c));
    }
    out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"HV3D stereoscopic video quality metric", "hv3d"};
  app.require_subcommand(1);

  ScoreFlags score;
  auto* score_cmd = app.add_subcommand("score", "Score a distorted stereo sequence against its reference");
  score_cmd->add_option("--ref-left", score.ref_left, "Reference left-view I420 file")->required();
  score_cmd->add_option("--ref-right", score.ref_right, "Reference right-view I420 file")->required();
  score_cmd->add_option("--dist-left", score.dist_left, "Distorted left-view I420 file")->required();
  score_cmd->add_option("--dist-right", score.dist_right, "Distorted right-view I420 file")->required();
  score_cmd->add_option("--width", score.width, "Luma width")->required();
  score_cmd->add_option("--height", score.height, "Luma height")->required();
  score_cmd->add_option("--frames", score.frames, "Frames to score")->required();
  score_cmd->add_option("--ref-disp", score.ref_disp, "Reference disparity PGM template or 'auto'");
  score_cmd->add_option("--dist-disp", score.dist_disp, "Distorted disparity PGM template or 'auto'");
  score_cmd->add_option("--config", score.config, "key=value override file");
  score_cmd->add_option("--out", score.out, "Directory for report.json and score.csv");
  score_cmd->add_option("--id", score.id, "Sequence id used in reports");
  score_cmd->add_option("--threads", score.threads, "Worker cap (0 = all cores)");
  score_cmd->add_option("--max-disp", score.max_disp, "Search range for estimated disparity");

  DistortFlags distort;
  auto* distort_cmd = app.add_subcommand("distort", "Apply a synthetic distortion to an I420 file");
  distort_cmd->add_option("--in", distort.in, "Input I420 file")->required();
  distort_cmd->add_option("--out", distort.out, "Output I420 file")->required();
  distort_cmd->add_option("--width", distort.width, "Luma width")->required();
  distort_cmd->add_option("--height", distort.height, "Luma height")->required();
  distort_cmd->add_option("--frames", distort.frames, "Frames to process")->required();
  distort_cmd->add_option("--spec", distort.spec, "kind:magnitude[:seed], e.g. awgn:10:42")->required();

  EstimateFlags estimate;
  auto* estimate_cmd = app.add_subcommand("estimate-disp", "Estimate disparity maps from a stereo pair");
  estimate_cmd->add_option("--left", estimate.left, "Left-view I420 file")->required();
  estimate_cmd->add_option("--right", estimate.right, "Right-view I420 file")->required();
  estimate_cmd->add_option("--width", estimate.width, "Luma width")->required();
  estimate_cmd->add_option("--height", estimate.height, "Luma height")->required();
  estimate_cmd->add_option("--frames", estimate.frames, "Frames to process")->required();
  estimate_cmd->add_option("--max-disp", estimate.max_disp, "Largest disparity searched (1..128)");
  estimate_cmd->add_option("--out", estimate.out, "Output PGM path template, e.g. disp_%04d.pgm")->required();

  BatchFlags batch;
  auto* batch_cmd = app.add_subcommand("batch", "Score a manifest and correlate with MOS");
  batch_cmd->add_option("--manifest", batch.manifest, "Manifest CSV")->required();
  batch_cmd->add_option("--out", batch.out, "Output directory")->required();
  batch_cmd->add_option("--config", batch.config, "key=value override file");
  batch_cmd->add_option("--threads", batch.threads, "Worker cap (0 = all cores)");
  batch_cmd->add_option("--max-disp", batch.max_disp, "Search range for estimated disparity");

  auto* mask_cmd = app.add_subcommand("mask-dump", "Print the 4x4 CSF mask as CSV");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  const auto usage = [&] {
    const std::vector<CLI::App*> subs = app.get_subcommands();
    return subs.empty() ? app.help() : subs.back()->help("hv3d");
  };
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << usage();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << usage();
    return kExitUsage;
  }

  try {
    if (score_cmd->parsed()) cmd_score(score, out, err);
    else if (distort_cmd->parsed()) cmd_distort(distort, err);
    else if (estimate_cmd->parsed()) cmd_estimate(estimate, err);
    else if (batch_cmd->parsed()) cmd_batch(batch, err);
    else if (mask_cmd->parsed()) cmd_mask_dump(out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (...) {
    err << "error: unknown failure\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace hv3d::cli
