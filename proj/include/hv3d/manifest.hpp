// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hv3d/yuv_io.hpp"

namespace hv3d {

struct ManifestEntry {
  std::string id;
  SequenceSpec ref;
  SequenceSpec dist;
  std::optional<double> mos;  // in [0, 5]
};

struct Manifest {
  std::vector<ManifestEntry> entries;

  bool has_mos() const;
};

inline constexpr std::string_view kManifestHeader =
    "id,ref_left,ref_right,ref_disp,dist_left,dist_right,dist_disp,width,height,frames,mos";

/// Splits one CSV record; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);

/// Parses manifest CSV text. Relative paths resolve against `base_dir`; a
/// disparity field of `auto` selects estimation. Ids must be unique and MOS
/// must be given for every entry or for none. Errors raise ParseError
/// (syntax) or ValidationError (content).
Manifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir = {});

Manifest load_manifest(const std::filesystem::path& path);

}  // namespace hv3d
