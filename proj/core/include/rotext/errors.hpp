// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotext {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rotated box with non-positive extents or non-finite fields.
class InvalidBoxError : public Error {
 public:
  using Error::Error;
};

/// Collinear points, zero-area hulls and similar unusable geometry.
class DegenerateGeometryError : public Error {
 public:
  using Error::Error;
};

/// Box angle outside the range where tan() is usable.
class AngleDomainError : public Error {
 public:
  using Error::Error;
};

/// A value that would overflow (e.g. exp of a huge delta).
class NumericRangeError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an API contract (mismatched lengths, bad thresholds).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Non-finite or otherwise unusable input values.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (anchor layout, normalization, manifest schema).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A file that cannot be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

}  // namespace rotext
