#include "steiner/error.hpp"

namespace steiner {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidCoordinate:
      return "invalid coordinate";
    case ErrorKind::Collinear:
      return "collinear";
    case ErrorKind::DegeneratePointSet:
      return "degenerate point set";
    case ErrorKind::CollinearSubset:
      return "collinear subset";
    case ErrorKind::PointInsideFocalSegment:
      return "point inside focal segment";
  }
  return "unknown error";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail) {
  std::string msg = to_string(kind);
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

GeometryError::GeometryError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(compose(kind, detail)), kind_(kind) {}

}  // namespace steiner
