#pragma once

#include <stdexcept>
#include <string>

namespace skyplan {

// Malformed input file (missing/ill-typed field, bad token).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Semantically invalid data (constraint violation in an instance, unreachable task).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failure (missing file, unwritable path).
class FileError : public std::runtime_error {
public:
  explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a hard size guard (exhaustive search entry points).
class SizeLimitError : public std::runtime_error {
public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skyplan
