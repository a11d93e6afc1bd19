#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

enum class ErrorKind {
  InvalidCoordinate,
  Collinear,
  DegeneratePointSet,
  CollinearSubset,
  PointInsideFocalSegment,
};

const char* to_string(ErrorKind kind);

// Raised by the geometry routines when a precondition is violated. what()
// starts with the short error name ("invalid coordinate", "collinear
// subset", ...) followed by an optional detail.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail = {});

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace steiner
