#include "steiner/marden.hpp"

#include <cmath>

namespace steiner {

namespace {

Complex pairwise_sum(const Triangle& t) {
  return t.v1() * t.v2() + t.v1() * t.v3() + t.v2() * t.v3();
}

bool lex_greater(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

}  // namespace

CubicPolynomial cubic_from_roots(const Triangle& t) {
  const Complex v1 = t.v1(), v2 = t.v2(), v3 = t.v3();
  return {Complex{1.0}, -(v1 + v2 + v3), pairwise_sum(t), -(v1 * v2 * v3)};
}

QuadraticPolynomial derivative(const CubicPolynomial& p) {
  return {3.0 * p.c3, 2.0 * p.c2, p.c1};
}

Complex eval_quadratic(const QuadraticPolynomial& q, Complex z) {
  return (q.q2 * z + q.q1) * z + q.q0;
}

bool is_equilateral(const Triangle& t) {
  const Complex v1 = t.v1(), v2 = t.v2(), v3 = t.v3();
  const Complex residual = v1 * v1 + v2 * v2 + v3 * v3 - pairwise_sum(t);
  const double s = t.scale();
  return std::abs(residual) <= kCoincidenceTolerance * s * s;
}

FociPair make_foci_pair(Complex a, Complex b, bool coincident) {
  if (coincident) return {a, a, true};
  if (lex_greater(b, a)) std::swap(a, b);
  return {a, b, false};
}

FociPair steiner_in_foci(const Triangle& t) {
  const Complex z0 = centroid(t);
  if (is_equilateral(t)) return make_foci_pair(z0, z0, true);
  const Complex s = std::sqrt(z0 * z0 - pairwise_sum(t) / 3.0);
  return make_foci_pair(z0 + s, z0 - s, false);
}

FociPair steiner_in_foci_power_sums(const Triangle& t) {
  const Complex v1 = t.v1(), v2 = t.v2(), v3 = t.v3();
  const Complex sum = v1 + v2 + v3;
  if (is_equilateral(t)) return make_foci_pair(sum / 3.0, sum / 3.0, true);
  const Complex d = std::sqrt(v1 * v1 + v2 * v2 + v3 * v3 - pairwise_sum(t));
  return make_foci_pair((sum + d) / 3.0, (sum - d) / 3.0, false);
}

FociPair steiner_circum_foci(const Triangle& t) {
  const Complex z0 = centroid(t);
  if (is_equilateral(t)) return make_foci_pair(z0, z0, true);
  const Complex s = std::sqrt(z0 * z0 - pairwise_sum(t) / 3.0);
  return make_foci_pair(z0 - 2.0 * s, z0 + 2.0 * s, false);
}

}  // namespace steiner
