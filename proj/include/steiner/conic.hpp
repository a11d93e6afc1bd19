#pragma once

#include <array>
#include <span>

#include "steiner/plane_geometry.hpp"

namespace steiner {

// A x^2 + B xy + C y^2 + D x + E y + F = 0
//
// Normalized form: the largest |coefficient| is 1 and the first coefficient
// (in A..F order) whose magnitude exceeds kSignTolerance is positive.
struct ConicCoefficients {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;
  double F = 0.0;

  std::array<double, 6> as_array() const { return {A, B, C, D, E, F}; }
  static ConicCoefficients from_array(const std::array<double, 6>& c) {
    return {c[0], c[1], c[2], c[3], c[4], c[5]};
  }

  double discriminant() const { return B * B - 4.0 * A * C; }
};

enum class ConicType { Ellipse, Parabola, Hyperbola };

const char* to_string(ConicType type);

inline constexpr double kSignTolerance = 1e-12;
inline constexpr double kDiscriminantTolerance = 1e-12;
inline constexpr double kDegenerateDeterminant = 1e-12;

// Scales to unit max-magnitude and fixes the sign. Throws
// GeometryError(DegeneratePointSet) if every coefficient is zero.
ConicCoefficients normalize(const ConicCoefficients& c);

// Determinant of a 5x5 matrix by Gaussian elimination with partial pivoting.
double determinant5(std::array<std::array<double, 5>, 5> m);

// The conic through five points. Each raw coefficient is the signed 5x5
// minor of the 6x6 incidence matrix obtained by dropping that coefficient's
// monomial column; the result is normalized.
//
// Errors: DegeneratePointSet if two points coincide or all six minors are
// below 1e-12 * rho^4 (rho = max(1, max |pk|)); CollinearSubset if any three
// of the points are collinear.
ConicCoefficients conic_through_five_points(std::span<const Complex, 5> points);
ConicCoefficients conic_through_five_points(Complex p1, Complex p2, Complex p3, Complex p4,
                                            Complex p5);

double eval_conic(const ConicCoefficients& c, Complex p);

// (dQ/dx, dQ/dy)
std::array<double, 2> conic_gradient(const ConicCoefficients& c, Complex p);

ConicType classify(const ConicCoefficients& c);

}  // namespace steiner
