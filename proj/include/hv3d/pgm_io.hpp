// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hv3d/plane.hpp"

namespace hv3d {

/// Decodes a binary (P5) PGM with maxval <= 255. '#' comments in the header
/// are skipped. Anything else raises ParseError.
Plane parse_pgm(std::span<const std::uint8_t> bytes);

Plane load_disparity_pgm(const std::filesystem::path& path);

/// Encodes a plane as P5 maxval 255, rounding and clamping samples to [0, 255].
std::vector<std::uint8_t> encode_pgm(const Plane& plane);

void write_pgm(const std::filesystem::path& path, const Plane& plane);

/// Expands a per-frame disparity path template.
///
/// The first printf-style integer conversion (`%d` or `%0Nd`) is replaced by
/// the 0-based frame index; `%%` is a literal percent. A template without a
/// conversion names one map used for every frame.
std::string disparity_path_for_frame(const std::string& pattern, int frame_index);

}  // namespace hv3d
