#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <utility>

#include "steiner/plane_geometry.hpp"

namespace oracle {

using steiner::Complex;

// Roots of q2 z^2 + q1 z + q0 by the textbook quadratic formula.
inline std::pair<Complex, Complex> quadratic_roots(Complex q2, Complex q1, Complex q0) {
  const Complex d = std::sqrt(q1 * q1 - 4.0 * q2 * q0);
  return {(-q1 + d) / (2.0 * q2), (-q1 - d) / (2.0 * q2)};
}

// Roots of p'(z) for p(z) = (z - v1)(z - v2)(z - v3), expanded by hand.
inline std::pair<Complex, Complex> derivative_roots(Complex v1, Complex v2, Complex v3) {
  return quadratic_roots(3.0, -2.0 * (v1 + v2 + v3), v1 * v2 + v1 * v3 + v2 * v3);
}

// Distance between two unordered pairs.
inline double pair_distance(std::pair<Complex, Complex> a, std::pair<Complex, Complex> b) {
  const double same = std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
  const double swapped = std::max(std::abs(a.first - b.second), std::abs(a.second - b.first));
  return std::min(same, swapped);
}

// Im((z3 - z1)/(z2 - z1)), the raw non-collinearity measure.
inline double raw_ratio_imag(Complex z1, Complex z2, Complex z3) {
  return ((z3 - z1) / (z2 - z1)).imag();
}

// Implicit coefficients of the ellipse ((x'/a)^2 + (y'/b)^2 = 1) in the frame
// rotated by theta about (cx, cy), scaled to unit max-magnitude with the
// first coefficient above 1e-12 made positive.
inline std::array<double, 6> ellipse_coefficients(Complex center, double a, double b,
                                                  double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double ia2 = 1.0 / (a * a), ib2 = 1.0 / (b * b);
  const double A = c * c * ia2 + s * s * ib2;
  const double B = 2.0 * s * c * (ia2 - ib2);
  const double C = s * s * ia2 + c * c * ib2;
  const double cx = center.real(), cy = center.imag();
  std::array<double, 6> k{A, B, C, -2.0 * A * cx - B * cy, -B * cx - 2.0 * C * cy,
                          A * cx * cx + B * cx * cy + C * cy * cy - 1.0};
  double peak = 0.0;
  for (double x : k) peak = std::max(peak, std::abs(x));
  for (double& x : k) x /= peak;
  for (double x : k) {
    if (std::abs(x) > 1e-12) {
      if (x < 0.0) {
        for (double& y : k) y = -y;
      }
      break;
    }
  }
  return k;
}

inline double eval_coefficients(const std::array<double, 6>& k, Complex p) {
  const double x = p.real(), y = p.imag();
  return k[0] * x * x + k[1] * x * y + k[2] * y * y + k[3] * x + k[4] * y + k[5];
}

// Central finite-difference gradient of f at p.
template <typename F>
std::array<double, 2> fd_gradient(F&& f, Complex p, double h = 1e-6) {
  return {(f(p + Complex{h, 0.0}) - f(p - Complex{h, 0.0})) / (2.0 * h),
          (f(p + Complex{0.0, h}) - f(p - Complex{0.0, h})) / (2.0 * h)};
}

// Triangles with vertices uniform in [-range, range]^2, rejecting those with
// |Im((z3 - z1)/(z2 - z1))| < min_ratio.
class TriangleGenerator {
 public:
  explicit TriangleGenerator(std::uint64_t seed, double range = 100.0, double min_ratio = 1e-6)
      : rng_(seed), coord_(-range, range), min_ratio_(min_ratio) {}

  std::array<Complex, 3> next() {
    for (;;) {
      std::array<Complex, 3> t{Complex{coord_(rng_), coord_(rng_)},
                               Complex{coord_(rng_), coord_(rng_)},
                               Complex{coord_(rng_), coord_(rng_)}};
      if (std::abs(raw_ratio_imag(t[0], t[1], t[2])) >= min_ratio_) return t;
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> coord_;
  double min_ratio_;
};

}  // namespace oracle
