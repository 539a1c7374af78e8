// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/yuv_io.hpp"

#include <cmath>
#include <fstream>

#include "hv3d/error.hpp"

namespace hv3d {
namespace {

void unpack(std::span<const std::uint8_t> src, Plane& dst) {
  auto out = dst.samples();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = src[i];
}

void pack(const Plane& src, std::uint8_t* dst) {
  for (double v : src.samples()) {
    *dst++ = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
  }
}

void check_dimensions(int width, int height) {
  if (width < 2 || height < 2 || width % 2 != 0 || height % 2 != 0) {
    throw ValidationError("4:2:0 content needs even positive dimensions, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
}

std::uintmax_t checked_file_size(const std::filesystem::path& path, int width, int height,
                                 int frames) {
  std::error_code ec;
  const std::uintmax_t actual = std::filesystem::file_size(path, ec);
  if (ec) throw IoError(path.string() + ": " + ec.message());
  const std::uintmax_t frame = frame_bytes_420(width, height);
  const std::uintmax_t wanted = frame * static_cast<std::uintmax_t>(frames);
  if (actual % frame != 0 || actual < wanted) {
    throw TruncatedFileError(path.string(), wanted, actual);
  }
  return actual;
}

}  // namespace

void SequenceSpec::validate() const {
  check_dimensions(width, height);
  if (frame_count < 1) {
    throw ValidationError("frame count must be at least 1, got " + std::to_string(frame_count));
  }
  if (disparity_mode == DisparityMode::kSupplied && disparity.empty()) {
    throw ValidationError("supplied disparity mode needs a disparity path");
  }
}

std::size_t frame_bytes_420(int width, int height) {
  check_dimensions(width, height);
  const std::size_t luma = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  return luma + luma / 2;
}

Frame decode_yuv420(std::span<const std::uint8_t> bytes, int width, int height) {
  const std::size_t expected = frame_bytes_420(width, height);
  if (bytes.size() != expected) {
    throw DimensionError("frame buffer of " + std::to_string(bytes.size()) + " bytes, expected " +
                         std::to_string(expected));
  }
  Frame f = Frame::filled(width, height, 0.0, 0.0);
  const std::size_t luma = f.y.size();
  const std::size_t chroma = f.u.size();
  unpack(bytes.subspan(0, luma), f.y);
  unpack(bytes.subspan(luma, chroma), f.u);
  unpack(bytes.subspan(luma + chroma, chroma), f.v);
  return f;
}

std::vector<std::uint8_t> encode_yuv420(const Frame& frame) {
  frame.validate();
  std::vector<std::uint8_t> out(frame_bytes_420(frame.width(), frame.height()));
  pack(frame.y, out.data());
  pack(frame.u, out.data() + frame.y.size());
  pack(frame.v, out.data() + frame.y.size() + frame.u.size());
  return out;
}

std::vector<Frame> read_yuv420(const std::filesystem::path& path, int width, int height,
                               int frames) {
  if (frames < 1) throw ValidationError("frame count must be at least 1");
  checked_file_size(path, width, height, frames);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string() + ": cannot open for reading");
  std::vector<std::uint8_t> buffer(frame_bytes_420(width, height));
  std::vector<Frame> out;
  out.reserve(static_cast<std::size_t>(frames));
  for (int i = 0; i < frames; ++i) {
    if (!in.read(reinterpret_cast<char*>(buffer.data()), static_cast<std::streamsize>(buffer.size()))) {
      throw IoError(path.string() + ": read failed at frame " + std::to_string(i));
    }
    out.push_back(decode_yuv420(buffer, width, height));
  }
  return out;
}

Frame read_yuv420_frame(const std::filesystem::path& path, int width, int height, int index) {
  if (index < 0) throw ValidationError("negative frame index");
  checked_file_size(path, width, height, index + 1);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string() + ": cannot open for reading");
  std::vector<std::uint8_t> buffer(frame_bytes_420(width, height));
  in.seekg(static_cast<std::streamoff>(buffer.size()) * index);
  if (!in.read(reinterpret_cast<char*>(buffer.data()), static_cast<std::streamsize>(buffer.size()))) {
    throw IoError(path.string() + ": read failed at frame " + std::to_string(index));
  }
  return decode_yuv420(buffer, width, height);
}

void write_yuv420(const std::filesystem::path& path, std::span<const Frame> frames) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  for (const Frame& f : frames) {
    const auto bytes = encode_yuv420(f);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  }
  if (!out) throw IoError(path.string() + ": write failed");
}

std::vector<Frame> load_yuv_sequence(const SequenceSpec& spec, Eye eye) {
  spec.validate();
  return read_yuv420(eye == Eye::kLeft ? spec.left : spec.right, spec.width, spec.height,
                     spec.frame_count);
}

}  // namespace hv3d
