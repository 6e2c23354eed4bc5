#include "dustbench/error.hpp"

namespace dustbench {

namespace {

std::string shape(int w, int h) {
  return std::to_string(w) + "x" + std::to_string(h);
}

}  // namespace

DimensionMismatch::DimensionMismatch(const std::string& what, int width_a,
                                     int height_a, int width_b, int height_b)
    : Error(what + ": " + shape(width_a, height_a) + " vs " +
            shape(width_b, height_b)),
      width_a_(width_a),
      height_a_(height_a),
      width_b_(width_b),
      height_b_(height_b) {}

const char* to_string(IoErrorKind kind) {
  switch (kind) {
    case IoErrorKind::kMissingFile:
      return "missing file";
    case IoErrorKind::kUnsupportedFormat:
      return "unsupported format";
    case IoErrorKind::kCorruptHeader:
      return "corrupt header";
    case IoErrorKind::kCorruptData:
      return "corrupt data";
    case IoErrorKind::kInvalidValue:
      return "invalid value";
    case IoErrorKind::kUnwritable:
      return "unwritable path";
  }
  return "io error";
}

IoError::IoError(IoErrorKind kind, const std::string& path,
                 const std::string& detail)
    : Error(std::string(to_string(kind)) + ": " + path +
            (detail.empty() ? "" : " (" + detail + ")")),
      kind_(kind),
      path_(path) {}

}  // namespace dustbench
