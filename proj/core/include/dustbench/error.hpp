#pragma once

#include <stdexcept>
#include <string>

namespace dustbench {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (beta <= 0, bins < 2, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two rasters that must share a shape do not.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, int width_a, int height_a,
                    int width_b, int height_b);

  int width_a() const { return width_a_; }
  int height_a() const { return height_a_; }
  int width_b() const { return width_b_; }
  int height_b() const { return height_b_; }

 private:
  int width_a_, height_a_, width_b_, height_b_;
};

enum class IoErrorKind {
  kMissingFile,
  kUnsupportedFormat,
  kCorruptHeader,
  kCorruptData,
  kInvalidValue,
  kUnwritable,
};

const char* to_string(IoErrorKind kind);

class IoError : public Error {
 public:
  IoError(IoErrorKind kind, const std::string& path, const std::string& detail);

  IoErrorKind kind() const { return kind_; }
  const std::string& path() const { return path_; }

 private:
  IoErrorKind kind_;
  std::string path_;
};

}  // namespace dustbench
