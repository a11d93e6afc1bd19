#include "steiner/plane_geometry.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "steiner/error.hpp"

namespace steiner {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool is_collinear(Complex z1, Complex z2, Complex z3) {
  if (!is_finite(z1) || !is_finite(z2) || !is_finite(z3)) {
    throw GeometryError(ErrorKind::InvalidCoordinate);
  }
  if (z1 == z2 || z1 == z3 || z2 == z3) return true;

  // Base the ratio on the longest side so that |c - a| <= |b - a|.
  const double d12 = std::abs(z2 - z1);
  const double d13 = std::abs(z3 - z1);
  const double d23 = std::abs(z3 - z2);
  Complex a = z1, b = z2, c = z3;
  double base = d12;
  if (d13 > base) {
    a = z1, b = z3, c = z2;
    base = d13;
  }
  if (d23 > base) {
    a = z2, b = z3, c = z1;
  }
  const Complex ratio = (c - a) / (b - a);
  const double bound = kCollinearTolerance * std::max(1.0, std::abs(c - a) / std::abs(b - a));
  return std::abs(ratio.imag()) <= bound;
}

Triangle Triangle::make(Complex v1, Complex v2, Complex v3) {
  if (is_collinear(v1, v2, v3)) {
    throw GeometryError(ErrorKind::Collinear,
                        fmt::format("({}, {}), ({}, {}), ({}, {})", v1.real(), v1.imag(),
                                    v2.real(), v2.imag(), v3.real(), v3.imag()));
  }
  return Triangle({v1, v2, v3});
}

double Triangle::scale() const {
  double s = 1.0;
  for (const Complex& v : v_) s = std::max(s, std::abs(v));
  return s;
}

Complex centroid(const Triangle& t) { return (t.v1() + t.v2() + t.v3()) / 3.0; }

std::array<Complex, 3> side_midpoints(const Triangle& t) {
  return {(t.v1() + t.v2()) / 2.0, (t.v1() + t.v3()) / 2.0, (t.v2() + t.v3()) / 2.0};
}

Complex reflect_in_point(Complex z, Complex z0) { return 2.0 * z0 - z; }

std::array<Complex, 3> reflected_tangency_points(const Triangle& t) {
  const Complex v1 = t.v1(), v2 = t.v2(), v3 = t.v3();
  return {(v1 + v2 + 4.0 * v3) / 6.0, (v1 + 4.0 * v2 + v3) / 6.0, (4.0 * v1 + v2 + v3) / 6.0};
}

Complex homothety(Complex z, Complex center, double k) { return k * z + center * (1.0 - k); }

BoundingSquare bounding_square(const Triangle& t) {
  const Complex z0 = centroid(t);
  double dmax = 0.0;
  for (const Complex& v : t.vertices()) {
    dmax = std::max({dmax, std::abs(z0.real() - v.real()), std::abs(z0.imag() - v.imag())});
  }
  dmax += 0.5;
  return {z0.real() - dmax, z0.imag() - dmax, z0.real() + dmax, z0.imag() + dmax};
}

}  // namespace steiner
