#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "steiner/conic.hpp"
#include "steiner/marden.hpp"
#include "steiner/plane_geometry.hpp"

namespace steiner {

// Metric description of an ellipse.
//   a >= b > 0, b^2 + (|f1 - f2| / 2)^2 = a^2, center = (f1 + f2) / 2,
//   theta in (-pi/2, pi/2] is the direction of the major axis (0 for circles),
//   ecc = sqrt(a^2 - b^2) / a.
struct EllipseGeometry {
  Complex center;
  Complex f1;
  Complex f2;
  double a = 0.0;
  double b = 0.0;
  double theta = 0.0;
  double ecc = 0.0;

  // Point at parameter angle t: center + R(theta) (a cos t, b sin t).
  Complex point_at(double t) const;
};

struct SemiAxes {
  double a = 0.0;
  double b = 0.0;
};

struct AxisVertices {
  Complex major1;  // center + a (cos theta, sin theta)
  Complex major2;
  Complex minor1;  // center + b (-sin theta, cos theta)
  Complex minor2;
};

// The six in-ellipse points known in closed form.
struct TangencyPoints {
  std::array<Complex, 3> midpoints;  // zE1, zE2, zE3
  std::array<Complex, 3> reflected;  // zE1r, zE2r, zE3r
};

struct SteinerEllipse {
  ConicCoefficients conic;
  EllipseGeometry geometry;
};

// In- and circum-ellipse of one triangle; one row each of
// (A..F, f1, f2, a, b).
struct SteinerReport {
  Triangle triangle;
  SteinerEllipse in;
  SteinerEllipse circum;
  TangencyPoints tangency;
  // Homothety images (factor -2 about the centroid) of zE1r and zE2r, the
  // two extra points used to fit the circum-conic.
  std::array<Complex, 2> circum_extra;
};

// Semi-axes from a point on the ellipse and the two foci, via the focal
// distance sum. Throws GeometryError(PointInsideFocalSegment) when the point
// cannot lie on an ellipse with these foci.
SemiAxes semi_axes(Complex point_on, Complex f1, Complex f2);

EllipseGeometry ellipse_geometry(Complex f1, Complex f2, Complex point_on);

AxisVertices axis_vertices(const EllipseGeometry& g);

// Foci from steiner_in_foci, axes from zE1, conic through
// zE1, zE2, zE3, zE2r, zE3r.
SteinerEllipse steiner_in_ellipse(const Triangle& t);

// Conic through v1, v2, v3 and the -2 homothety images of zE1r, zE2r; foci
// from steiner_circum_foci, axes from v1.
SteinerEllipse steiner_circum_ellipse(const Triangle& t);

SteinerReport steiner_report(const Triangle& t);

// Tolerances used by validate_report.
struct ValidationTolerances {
  double membership = 1e-9;  // |Q(p)| <= membership * rho^2
  double focal_sum = 1e-9;   // relative
  double tangency = 1e-8;    // relative
  double center = 1e-12;     // relative to triangle scale
  double homothety = 1e-9;   // relative
};

// Checks the geometric invariants of a report (membership of the tangency
// points and vertices, focal sums, tangency at the midpoints, shared center,
// circum = 2 * in scaling, ellipse discriminants). Returns one message per
// violated invariant; empty means valid.
std::vector<std::string> validate_report(const SteinerReport& report,
                                         const ValidationTolerances& tol = {});

}  // namespace steiner
