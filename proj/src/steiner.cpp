#include "steiner/steiner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "steiner/error.hpp"

namespace steiner {

namespace {

double fold_half_turn(double angle) {
  if (angle > std::numbers::pi / 2) angle -= std::numbers::pi;
  if (angle <= -std::numbers::pi / 2) angle += std::numbers::pi;
  return angle;
}

double max_radius(std::span<const Complex> pts) {
  double r = 1.0;
  for (const Complex& p : pts) r = std::max(r, std::abs(p));
  return r;
}

double pair_distance(Complex a1, Complex a2, Complex b1, Complex b2) {
  const double same = std::max(std::abs(a1 - b1), std::abs(a2 - b2));
  const double swapped = std::max(std::abs(a1 - b2), std::abs(a2 - b1));
  return std::min(same, swapped);
}

}  // namespace

Complex EllipseGeometry::point_at(double t) const {
  const Complex local{a * std::cos(t), b * std::sin(t)};
  return center + std::polar(1.0, theta) * local;
}

SemiAxes semi_axes(Complex point_on, Complex f1, Complex f2) {
  const double a = 0.5 * (std::abs(point_on - f1) + std::abs(point_on - f2));
  const double half_focal = 0.5 * std::abs(f1 - f2);
  const double b2 = a * a - half_focal * half_focal;
  if (b2 < 1e-15) throw GeometryError(ErrorKind::PointInsideFocalSegment);
  return {a, std::sqrt(b2)};
}

EllipseGeometry ellipse_geometry(Complex f1, Complex f2, Complex point_on) {
  const SemiAxes axes = semi_axes(point_on, f1, f2);
  EllipseGeometry g;
  g.center = 0.5 * (f1 + f2);
  g.f1 = f1;
  g.f2 = f2;
  g.a = axes.a;
  g.b = axes.b;
  const Complex focal = f1 - f2;
  g.theta = std::abs(focal) <= 1e-9 * axes.a ? 0.0 : fold_half_turn(std::arg(focal));
  g.ecc = std::sqrt(std::max(0.0, axes.a * axes.a - axes.b * axes.b)) / axes.a;
  return g;
}

AxisVertices axis_vertices(const EllipseGeometry& g) {
  const Complex major = std::polar(g.a, g.theta);
  const Complex minor = std::polar(g.b, g.theta) * Complex{0.0, 1.0};
  return {g.center + major, g.center - major, g.center + minor, g.center - minor};
}

SteinerEllipse steiner_in_ellipse(const Triangle& t) {
  const auto mid = side_midpoints(t);
  const auto refl = reflected_tangency_points(t);
  const FociPair foci = steiner_in_foci(t);
  return {conic_through_five_points(mid[0], mid[1], mid[2], refl[1], refl[2]),
          ellipse_geometry(foci.f1, foci.f2, mid[0])};
}

SteinerEllipse steiner_circum_ellipse(const Triangle& t) {
  const Complex z0 = centroid(t);
  const auto refl = reflected_tangency_points(t);
  const Complex extra1 = homothety(refl[0], z0, -2.0);
  const Complex extra2 = homothety(refl[1], z0, -2.0);
  const FociPair foci = steiner_circum_foci(t);
  return {conic_through_five_points(t.v1(), t.v2(), t.v3(), extra1, extra2),
          ellipse_geometry(foci.f1, foci.f2, t.v1())};
}

SteinerReport steiner_report(const Triangle& t) {
  const Complex z0 = centroid(t);
  const auto refl = reflected_tangency_points(t);
  return SteinerReport{
      t,
      steiner_in_ellipse(t),
      steiner_circum_ellipse(t),
      TangencyPoints{side_midpoints(t), refl},
      {homothety(refl[0], z0, -2.0), homothety(refl[1], z0, -2.0)},
  };
}

std::vector<std::string> validate_report(const SteinerReport& r, const ValidationTolerances& tol) {
  std::vector<std::string> issues;
  const Triangle& t = r.triangle;
  const auto& v = t.vertices();
  const double scale = t.scale();
  const Complex z0 = centroid(t);

  std::vector<Complex> in_points(r.tangency.midpoints.begin(), r.tangency.midpoints.end());
  in_points.insert(in_points.end(), r.tangency.reflected.begin(), r.tangency.reflected.end());
  std::vector<Complex> circ_points(v.begin(), v.end());
  circ_points.insert(circ_points.end(), r.circum_extra.begin(), r.circum_extra.end());

  auto check_membership = [&](const char* name, const SteinerEllipse& e,
                              const std::vector<Complex>& pts) {
    const double rho = max_radius(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double q = std::abs(eval_conic(e.conic, pts[i]));
      if (!(q <= tol.membership * rho * rho)) {
        issues.push_back(fmt::format("{}: point {} off the conic (|Q| = {:.3e})", name, i, q));
      }
      const double sum = std::abs(pts[i] - e.geometry.f1) + std::abs(pts[i] - e.geometry.f2);
      const double two_a = 2.0 * e.geometry.a;
      if (!(std::abs(sum - two_a) <= tol.focal_sum * two_a)) {
        issues.push_back(fmt::format("{}: focal sum at point {} is {} != 2a = {}", name, i, sum,
                                     two_a));
      }
    }
    if (!(e.conic.discriminant() < 0.0)) {
      issues.push_back(fmt::format("{}: conic is not an ellipse", name));
    }
    const auto& g = e.geometry;
    if (!(g.a >= g.b && g.b > 0.0)) issues.push_back(fmt::format("{}: a >= b > 0 violated", name));
    if (!(std::abs(g.center - z0) <= tol.center * scale)) {
      issues.push_back(fmt::format("{}: center is not the centroid", name));
    }
  };
  check_membership("in", r.in, in_points);
  check_membership("circum", r.circum, circ_points);

  // The in-ellipse touches each side at its midpoint.
  const std::array<std::pair<Complex, Complex>, 3> sides{
      {{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}}};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto grad = conic_gradient(r.in.conic, r.tangency.midpoints[k]);
    const Complex dir = sides[k].second - sides[k].first;
    const double dot = grad[0] * dir.real() + grad[1] * dir.imag();
    const double bound = tol.tangency * std::hypot(grad[0], grad[1]) * std::abs(dir);
    if (!(std::abs(dot) <= bound)) {
      issues.push_back(fmt::format("in: not tangent at midpoint {} (dot = {:.3e})", k + 1, dot));
    }
  }

  const auto& gi = r.in.geometry;
  const auto& gc = r.circum.geometry;
  if (!(std::abs(gc.a - 2.0 * gi.a) <= tol.homothety * 2.0 * gi.a) ||
      !(std::abs(gc.b - 2.0 * gi.b) <= tol.homothety * 2.0 * gi.b)) {
    issues.push_back("circum axes are not twice the in axes");
  }
  if (!(std::abs(gc.ecc - gi.ecc) <= tol.homothety)) {
    issues.push_back("in and circum eccentricities differ");
  }
  const Complex h1 = homothety(gi.f1, z0, -2.0);
  const Complex h2 = homothety(gi.f2, z0, -2.0);
  if (!(pair_distance(h1, h2, gc.f1, gc.f2) <= tol.homothety * scale)) {
    issues.push_back("circum foci are not the homothety images of the in foci");
  }
  return issues;
}

}  // namespace steiner
