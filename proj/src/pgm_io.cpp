// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "hv3d/pgm_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>

#include "hv3d/error.hpp"

namespace hv3d {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long read_positive(const char* what) {
    skip_space_and_comments();
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000L) throw ParseError(std::string("PGM ") + what + " out of range");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError(std::string("PGM header: missing ") + what);
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void end_header() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw ParseError("PGM header: expected whitespace before raster");
    }
    ++pos_;
  }

  std::size_t position() const { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

std::optional<int> parse_width_spec(const std::string& pattern, std::size_t& pos) {
  // pos points just past '%'; accepts d or 0Nd.
  std::size_t p = pos;
  int width = 0;
  if (p < pattern.size() && pattern[p] == '0') {
    ++p;
    while (p < pattern.size() && std::isdigit(static_cast<unsigned char>(pattern[p]))) {
      width = width * 10 + (pattern[p] - '0');
      if (width > 32) return std::nullopt;
      ++p;
    }
  }
  if (p < pattern.size() && pattern[p] == 'd') {
    pos = p + 1;
    return width;
  }
  return std::nullopt;
}

}  // namespace

Plane parse_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') throw ParseError("not a PGM file");
  if (bytes[1] != '5') {
    throw ParseError(std::string("unsupported PGM variant P") + static_cast<char>(bytes[1]));
  }
  HeaderReader header(bytes);
  const long width = header.read_positive("width");
  const long height = header.read_positive("height");
  const long maxval = header.read_positive("maxval");
  if (width < 1 || height < 1) throw ParseError("PGM dimensions must be positive");
  if (maxval < 1 || maxval > 255) {
    throw ParseError("unsupported PGM maxval " + std::to_string(maxval) + " (need 1..255)");
  }
  header.end_header();
  const std::size_t expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const std::size_t available = bytes.size() - header.position();
  if (available != expected) {
    throw ParseError("PGM payload has " + std::to_string(available) + " bytes, header declares " +
                     std::to_string(expected));
  }
  Plane out(static_cast<int>(width), static_cast<int>(height));
  auto dst = out.samples();
  for (std::size_t i = 0; i < expected; ++i) dst[i] = bytes[header.position() + i];
  return out;
}

Plane load_disparity_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string() + ": cannot open for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return parse_pgm(bytes);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_pgm(const Plane& plane) {
  const std::string header =
      "P5\n" + std::to_string(plane.width()) + " " + std::to_string(plane.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + plane.size());
  for (double v : plane.samples()) {
    out.push_back(static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L)));
  }
  return out;
}

void write_pgm(const std::filesystem::path& path, const Plane& plane) {
  const auto bytes = encode_pgm(plane);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError(path.string() + ": write failed");
}

std::string disparity_path_for_frame(const std::string& pattern, int frame_index) {
  std::string out;
  bool substituted = false;
  for (std::size_t i = 0; i < pattern.size();) {
    if (pattern[i] != '%') {
      out.push_back(pattern[i++]);
      continue;
    }
    if (i + 1 < pattern.size() && pattern[i + 1] == '%') {
      out.push_back('%');
      i += 2;
      continue;
    }
    std::size_t pos = i + 1;
    const auto width = substituted ? std::nullopt : parse_width_spec(pattern, pos);
    if (!width) throw ValidationError("bad disparity path template: " + pattern);
    std::string digits = std::to_string(frame_index);
    if (static_cast<int>(digits.size()) < *width) {
      digits.insert(0, static_cast<std::size_t>(*width) - digits.size(), '0');
    }
    out += digits;
    substituted = true;
    i = pos;
  }
  return out;
}

}  // namespace hv3d
