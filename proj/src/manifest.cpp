// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/manifest.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "hv3d/error.hpp"

namespace hv3d {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

int parse_int(const std::string& field, const char* what, std::size_t line_no) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("manifest line " + std::to_string(line_no) + ": " + what +
                     " is not an integer: '" + field + "'");
  }
  return v;
}

std::filesystem::path resolve(const std::string& p, const std::filesystem::path& base) {
  std::filesystem::path path(p);
  return path.is_relative() && !base.empty() ? base / path : path;
}

SequenceSpec make_spec(const std::string& left, const std::string& right, const std::string& disp,
                       int w, int h, int frames, const std::filesystem::path& base) {
  SequenceSpec s;
  s.left = resolve(left, base);
  s.right = resolve(right, base);
  s.width = w;
  s.height = h;
  s.frame_count = frames;
  if (disp.empty() || disp == "auto") {
    s.disparity_mode = DisparityMode::kEstimate;
  } else {
    s.disparity_mode = DisparityMode::kSupplied;
    s.disparity = resolve(disp, base).string();
  }
  return s;
}

}  // namespace

bool Manifest::has_mos() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const ManifestEntry& e) { return e.mos.has_value(); });
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field");
  fields.push_back(trim(current));
  return fields;
}

Manifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
  Manifest m;
  std::set<std::string> ids;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t with_mos = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (!header_seen) {
      const auto expected = split_csv_line(kManifestHeader);
      if (fields != expected) {
        throw ParseError("manifest header must be: " + std::string(kManifestHeader));
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 11) {
      throw ParseError("manifest line " + std::to_string(line_no) + ": expected 11 fields, got " +
                       std::to_string(fields.size()));
    }
    ManifestEntry e;
    e.id = fields[0];
    if (e.id.empty()) throw ValidationError("manifest line " + std::to_string(line_no) + ": empty id");
    if (!ids.insert(e.id).second) throw ValidationError("manifest: duplicate id '" + e.id + "'");
    const int w = parse_int(fields[7], "width", line_no);
    const int h = parse_int(fields[8], "height", line_no);
    const int frames = parse_int(fields[9], "frames", line_no);
    e.ref = make_spec(fields[1], fields[2], fields[3], w, h, frames, base_dir);
    e.dist = make_spec(fields[4], fields[5], fields[6], w, h, frames, base_dir);
    e.ref.validate();
    e.dist.validate();
    if (!fields[10].empty()) {
      double mos = 0.0;
      const auto& f = fields[10];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), mos);
      if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw ParseError("manifest line " + std::to_string(line_no) + ": mos is not a number");
      }
      if (mos < 0.0 || mos > 5.0) {
        throw ValidationError("manifest line " + std::to_string(line_no) + ": mos outside [0, 5]");
      }
      e.mos = mos;
      ++with_mos;
    }
    m.entries.push_back(std::move(e));
  }
  if (!header_seen) throw ParseError("manifest is empty");
  if (with_mos != 0 && with_mos != m.entries.size()) {
    throw ValidationError("manifest: MOS must be given for all entries or none");
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": cannot open manifest");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str(), path.parent_path());
}

}  // namespace hv3d
