#pragma once

#include <array>
#include <complex>

namespace steiner {

// A point of the complex plane; real part is x, imaginary part is y.
using Complex = std::complex<double>;

inline constexpr double kCollinearTolerance = 1e-9;

bool is_finite(Complex z);

// True when z1, z2, z3 lie on one line (within kCollinearTolerance relative
// to the longest pairwise separation). Coincident points count as collinear.
// The longest side is used as the base of the ratio test, so the answer does
// not depend on argument order. Throws GeometryError(InvalidCoordinate) on
// NaN/Inf input.
bool is_collinear(Complex z1, Complex z2, Complex z3);

// Three non-collinear vertices. The only way to obtain one is make(), which
// rejects collinear or non-finite input.
class Triangle {
 public:
  static Triangle make(Complex v1, Complex v2, Complex v3);

  Complex v1() const { return v_[0]; }
  Complex v2() const { return v_[1]; }
  Complex v3() const { return v_[2]; }
  const std::array<Complex, 3>& vertices() const { return v_; }

  // max(1, max |vk|); the length scale used by every relative tolerance.
  double scale() const;

 private:
  explicit Triangle(std::array<Complex, 3> v) : v_(v) {}
  std::array<Complex, 3> v_;
};

struct BoundingSquare {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  double side() const { return xmax - xmin; }
  Complex center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
  bool contains(Complex z) const {
    return z.real() >= xmin && z.real() <= xmax && z.imag() >= ymin && z.imag() <= ymax;
  }
};

Complex centroid(const Triangle& t);

// zE1 = (v1+v2)/2, zE2 = (v1+v3)/2, zE3 = (v2+v3)/2.
std::array<Complex, 3> side_midpoints(const Triangle& t);

// Point reflection of z through z0: 2*z0 - z.
Complex reflect_in_point(Complex z, Complex z0);

// The side midpoints reflected through the centroid, in closed form:
// zE1r = (v1+v2+4v3)/6, zE2r = (v1+4v2+v3)/6, zE3r = (4v1+v2+v3)/6.
std::array<Complex, 3> reflected_tangency_points(const Triangle& t);

// Scaling by factor k about center: k*z + center*(1-k).
Complex homothety(Complex z, Complex center, double k);

// Square centered on the centroid whose half-side is the largest coordinate
// distance from the centroid to a vertex, plus 0.5.
BoundingSquare bounding_square(const Triangle& t);

}  // namespace steiner
