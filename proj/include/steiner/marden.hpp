#pragma once

#include "steiner/plane_geometry.hpp"

namespace steiner {

// c3 z^3 + c2 z^2 + c1 z + c0
struct CubicPolynomial {
  Complex c3{1.0};
  Complex c2;
  Complex c1;
  Complex c0;
};

// q2 z^2 + q1 z + q0
struct QuadraticPolynomial {
  Complex q2;
  Complex q1;
  Complex q0;
};

// Foci of a Steiner ellipse. f1 is the focus with the lexicographically
// larger (re, im). When the triangle is equilateral both foci are the
// centroid and `coincident` is set.
struct FociPair {
  Complex f1;
  Complex f2;
  bool coincident = false;
};

inline constexpr double kCoincidenceTolerance = 1e-9;

// (z - v1)(z - v2)(z - v3)
CubicPolynomial cubic_from_roots(const Triangle& t);

QuadraticPolynomial derivative(const CubicPolynomial& p);

Complex eval_quadratic(const QuadraticPolynomial& q, Complex z);

// v1^2 + v2^2 + v3^2 - (v1 v2 + v1 v3 + v2 v3) vanishes, up to
// kCoincidenceTolerance * scale^2.
bool is_equilateral(const Triangle& t);

// Roots of p'(z) for p = cubic_from_roots(t), in centroid form:
// z0 +- sqrt(z0^2 - (v1 v2 + v1 v3 + v2 v3) / 3), principal branch.
// For an equilateral triangle the radicand is pure rounding noise and both
// foci are returned as the centroid.
FociPair steiner_in_foci(const Triangle& t);

// Same foci from the power-sum form
// (1/3) * (v1 + v2 + v3 +- sqrt(sum vk^2 - sum vi vj)).
FociPair steiner_in_foci_power_sums(const Triangle& t);

// Foci of the circum-ellipse: z0 -+ 2 * sqrt(z0^2 - (v1 v2 + v1 v3 + v2 v3) / 3),
// returned in FociPair order.
FociPair steiner_circum_foci(const Triangle& t);

// Orders an unordered pair by the FociPair convention.
FociPair make_foci_pair(Complex a, Complex b, bool coincident);

}  // namespace steiner
