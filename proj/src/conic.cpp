#include "steiner/conic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "steiner/error.hpp"

namespace steiner {

const char* to_string(ConicType type) {
  switch (type) {
    case ConicType::Ellipse:
      return "ellipse";
    case ConicType::Parabola:
      return "parabola";
    case ConicType::Hyperbola:
      return "hyperbola";
  }
  return "unknown";
}

ConicCoefficients normalize(const ConicCoefficients& c) {
  std::array<double, 6> v = c.as_array();
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  if (peak == 0.0 || !std::isfinite(peak)) throw GeometryError(ErrorKind::DegeneratePointSet);
  for (double& x : v) x /= peak;
  const auto lead = std::find_if(v.begin(), v.end(),
                                 [](double x) { return std::abs(x) > kSignTolerance; });
  if (lead != v.end() && *lead < 0.0) {
    for (double& x : v) x = -x;
  }
  for (double& x : v) x += 0.0;  // no -0 in output
  return ConicCoefficients::from_array(v);
}

double determinant5(std::array<std::array<double, 5>, 5> m) {
  double det = 1.0;
  for (std::size_t col = 0; col < 5; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 5; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < 5; ++r) {
      const double factor = m[r][col] / m[col][col];
      for (std::size_t k = col + 1; k < 5; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  return det;
}

ConicCoefficients conic_through_five_points(std::span<const Complex, 5> points) {
  double rho = 1.0;
  for (const Complex& p : points) {
    if (!is_finite(p)) throw GeometryError(ErrorKind::InvalidCoordinate);
    rho = std::max(rho, std::abs(p));
  }
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (points[i] == points[j]) {
        throw GeometryError(ErrorKind::DegeneratePointSet, "repeated point");
      }
    }
  }
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      for (std::size_t k = j + 1; k < 5; ++k) {
        if (is_collinear(points[i], points[j], points[k])) {
          throw GeometryError(ErrorKind::CollinearSubset);
        }
      }
    }
  }

  // Rows of the incidence matrix: x^2, xy, y^2, x, y, 1.
  std::array<std::array<double, 6>, 5> rows{};
  for (std::size_t r = 0; r < 5; ++r) {
    const double x = points[r].real();
    const double y = points[r].imag();
    rows[r] = {x * x, x * y, y * y, x, y, 1.0};
  }

  // Cofactor expansion along the symbolic first row: alternating signs.
  std::array<double, 6> raw{};
  double largest = 0.0;
  for (std::size_t drop = 0; drop < 6; ++drop) {
    std::array<std::array<double, 5>, 5> minor{};
    for (std::size_t r = 0; r < 5; ++r) {
      std::size_t out = 0;
      for (std::size_t c = 0; c < 6; ++c) {
        if (c != drop) minor[r][out++] = rows[r][c];
      }
    }
    const double det = determinant5(minor);
    raw[drop] = (drop % 2 == 0) ? det : -det;
    largest = std::max(largest, std::abs(det));
  }
  const double rho2 = rho * rho;
  if (largest <= kDegenerateDeterminant * rho2 * rho2) {
    throw GeometryError(ErrorKind::DegeneratePointSet);
  }
  return normalize(ConicCoefficients::from_array(raw));
}

ConicCoefficients conic_through_five_points(Complex p1, Complex p2, Complex p3, Complex p4,
                                            Complex p5) {
  const std::array<Complex, 5> pts{p1, p2, p3, p4, p5};
  return conic_through_five_points(std::span<const Complex, 5>(pts));
}

double eval_conic(const ConicCoefficients& c, Complex p) {
  const double x = p.real();
  const double y = p.imag();
  return c.A * x * x + c.B * x * y + c.C * y * y + c.D * x + c.E * y + c.F;
}

std::array<double, 2> conic_gradient(const ConicCoefficients& c, Complex p) {
  const double x = p.real();
  const double y = p.imag();
  return {2.0 * c.A * x + c.B * y + c.D, c.B * x + 2.0 * c.C * y + c.E};
}

ConicType classify(const ConicCoefficients& c) {
  const double disc = c.discriminant();
  if (disc < -kDiscriminantTolerance) return ConicType::Ellipse;
  if (disc > kDiscriminantTolerance) return ConicType::Hyperbola;
  return ConicType::Parabola;
}

}  // namespace steiner
