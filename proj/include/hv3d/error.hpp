// Copyright 2026 The hv3d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hv3d {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// I/O succeeded but the on-disk size does not match the declared geometry.
class TruncatedFileError : public IoError {
 public:
  TruncatedFileError(const std::string& path, std::uintmax_t expected, std::uintmax_t actual);

  std::uintmax_t expected_bytes() const noexcept { return expected_; }
  std::uintmax_t actual_bytes() const noexcept { return actual_; }

 private:
  std::uintmax_t expected_;
  std::uintmax_t actual_;
};

/// Malformed file content (PGM header, manifest CSV, config file).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands whose shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Parameters or user input violating a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hv3d
