// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sarforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A primitive, excitation or sweep specification violates its preconditions.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DegenerateFacetError : public Error {
 public:
  explicit DegenerateFacetError(std::vector<std::size_t> facets);
  const std::vector<std::size_t>& facets() const noexcept { return facets_; }

 private:
  std::vector<std::size_t> facets_;
};

/// Container (BSAR1) problems: bad magic, version mismatch, checksum, truncation.
class FormatError : public Error {
 public:
  using Error::Error;
};

class ChecksumError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// The k-space support of a patch is too small to form an image.
class SupportCollapsedError : public Error {
 public:
  using Error::Error;
};

/// Configuration problem; path() names the offending field (e.g. "$.scene.objects[0].path").
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace sarforge
