// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hv3d/plane.hpp"

namespace hv3d {

enum class Eye { kLeft, kRight };

enum class DisparityMode { kSupplied, kEstimate };

/// Where one stereo sequence lives on disk.
///
/// `disparity` is a path template (see disparity_path_for_frame) and is
/// ignored when `disparity_mode` is kEstimate.
struct SequenceSpec {
  std::filesystem::path left;
  std::filesystem::path right;
  std::string disparity;
  int width = 0;
  int height = 0;
  int frame_count = 0;
  DisparityMode disparity_mode = DisparityMode::kEstimate;

  /// Throws ValidationError for non-positive/odd dimensions or frame_count < 1.
  void validate() const;
};

/// Bytes in one 8-bit I420 frame: w*h luma + 2 * (w/2)*(h/2) chroma.
std::size_t frame_bytes_420(int width, int height);

/// Decodes one frame from exactly frame_bytes_420(width, height) bytes.
Frame decode_yuv420(std::span<const std::uint8_t> bytes, int width, int height);

/// Encodes a frame, rounding to nearest and clamping to [0, 255].
std::vector<std::uint8_t> encode_yuv420(const Frame& frame);

/// Reads `frames` frames from a raw I420 file.
///
/// The file size must be a whole number of frames and hold at least `frames`
/// of them; otherwise TruncatedFileError reports the expected and actual sizes.
std::vector<Frame> read_yuv420(const std::filesystem::path& path, int width, int height, int frames);

/// Reads frame `index` (0-based) without loading the rest of the file.
Frame read_yuv420_frame(const std::filesystem::path& path, int width, int height, int index);

/// Writes frames back to back, truncating any existing file.
void write_yuv420(const std::filesystem::path& path, std::span<const Frame> frames);

/// Loads one eye of a sequence, in file order.
std::vector<Frame> load_yuv_sequence(const SequenceSpec& spec, Eye eye);

}  // namespace hv3d
