#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "steiner/error.hpp"
#include "steiner/plane_geometry.hpp"

using steiner::Complex;
using steiner::Triangle;

namespace {

const double kSqrt3 = std::sqrt(3.0);

Triangle general() { return Triangle::make(0.0, 4.0, {2.0, 3.0}); }
Triangle equilateral() { return Triangle::make(4.0, {-2.0, 2.0 * kSqrt3}, {-2.0, -2.0 * kSqrt3}); }

bool near(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("centroid") {
  CHECK(near(steiner::centroid(general()), {2.0, 1.0}));
  CHECK(near(steiner::centroid(Triangle::make(0.0, {0.0, 1.0}, 1.0)), {1.0 / 3, 1.0 / 3}));
  CHECK(near(steiner::centroid(equilateral()), 0.0));
}

TEST_CASE("is_collinear examples") {
  CHECK(steiner::is_collinear(0.0, {1.0, 1.0}, {2.0, 2.0}));
  CHECK_FALSE(steiner::is_collinear(0.0, 4.0, {2.0, 3.0}));
  CHECK_FALSE(steiner::is_collinear({1.0, -7.0}, {4.0, -0.5}, {-5.0, -1.0}));
}

TEST_CASE("is_collinear degenerate inputs") {
  CHECK(steiner::is_collinear({1.0, 2.0}, {1.0, 2.0}, {5.0, -3.0}));
  CHECK(steiner::is_collinear({1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}));
  // Off the line by far less than the relative tolerance.
  CHECK(steiner::is_collinear(0.0, 1000.0, {500.0, 1e-7}));
  CHECK_FALSE(steiner::is_collinear(0.0, 1000.0, {500.0, 1e-3}));

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(steiner::is_collinear({nan, 0.0}, 1.0, 2.0), steiner::GeometryError);
  CHECK_THROWS_WITH(steiner::is_collinear(0.0, {1.0, inf}, 2.0), "invalid coordinate");
}

TEST_CASE("Triangle::make rejects collinear vertices") {
  try {
    Triangle::make(0.0, {1.0, 1.0}, {2.0, 2.0});
    FAIL("expected GeometryError");
  } catch (const steiner::GeometryError& e) {
    CHECK(e.kind() == steiner::ErrorKind::Collinear);
  }
  CHECK(general().scale() == doctest::Approx(4.0));
  CHECK(Triangle::make(0.0, {0.5, 0.0}, {0.0, 0.5}).scale() == 1.0);
}

TEST_CASE("side_midpoints") {
  auto m = steiner::side_midpoints(general());
  CHECK(near(m[0], 2.0));
  CHECK(near(m[1], {1.0, 1.5}));
  CHECK(near(m[2], {3.0, 1.5}));

  m = steiner::side_midpoints(Triangle::make(0.0, 2.0, {0.0, 2.0}));
  CHECK(near(m[0], 1.0));
  CHECK(near(m[1], {0.0, 1.0}));
  CHECK(near(m[2], {1.0, 1.0}));

  m = steiner::side_midpoints(equilateral());
  CHECK(near(m[0], {1.0, kSqrt3}));
  CHECK(near(m[1], {1.0, -kSqrt3}));
  CHECK(near(m[2], -2.0));
}

TEST_CASE("reflect_in_point") {
  CHECK(near(steiner::reflect_in_point(2.0, {2.0, 1.0}), {2.0, 2.0}));
  CHECK(near(steiner::reflect_in_point({3.0, -4.0}, {3.0, -4.0}), {3.0, -4.0}));
  CHECK(near(steiner::reflect_in_point({1.0, 1.5}, {2.0, 1.0}), {3.0, 0.5}));
}

TEST_CASE("reflected_tangency_points") {
  auto r = steiner::reflected_tangency_points(general());
  CHECK(near(r[0], {2.0, 2.0}));
  CHECK(near(r[1], {3.0, 0.5}));
  CHECK(near(r[2], {1.0, 0.5}));

  for (const Complex& p : steiner::reflected_tangency_points(equilateral())) {
    CHECK(std::abs(p) == doctest::Approx(2.0).epsilon(1e-12));
  }

  r = steiner::reflected_tangency_points(Triangle::make(0.0, 2.0, {0.0, 2.0}));
  CHECK(near(r[2], {1.0 / 3, 1.0 / 3}));
}

TEST_CASE("homothety") {
  const Triangle t = general();
  const Complex z0 = steiner::centroid(t);
  const auto m = steiner::side_midpoints(t);
  CHECK(near(steiner::homothety(m[2], z0, -2.0), t.v1()));
  CHECK(near(steiner::homothety({1.5, -2.0}, {1.5, -2.0}, 7.0), {1.5, -2.0}));
  CHECK(near(steiner::homothety(0.0, 1.0, -2.0), 3.0));
}

TEST_CASE("bounding_square") {
  auto sq = steiner::bounding_square(general());
  CHECK(sq.xmin == doctest::Approx(-0.5));
  CHECK(sq.ymin == doctest::Approx(-1.5));
  CHECK(sq.xmax == doctest::Approx(4.5));
  CHECK(sq.ymax == doctest::Approx(3.5));

  sq = steiner::bounding_square(Triangle::make(0.0, 2.0, {1.0, 1.0}));
  CHECK(sq.xmin == doctest::Approx(-0.5));
  CHECK(sq.ymin == doctest::Approx(-7.0 / 6));
  CHECK(sq.xmax == doctest::Approx(2.5));
  CHECK(sq.ymax == doctest::Approx(11.0 / 6));

  // Coordinate distances from z0 = 0 are {4, 2, 2, 0, 2sqrt3, 2sqrt3}.
  sq = steiner::bounding_square(equilateral());
  const double d = 4.5;
  CHECK(sq.xmin == doctest::Approx(-d));
  CHECK(sq.xmax == doctest::Approx(d));
  CHECK(sq.ymin == doctest::Approx(-d));
  CHECK(sq.ymax == doctest::Approx(d));
}

TEST_CASE("plane geometry properties over random triangles") {
  oracle::TriangleGenerator gen(7);
  std::uniform_real_distribution<double> unit(-3.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const auto v = gen.next();
    const Triangle t = Triangle::make(v[0], v[1], v[2]);
    const double s = t.scale();
    const Complex z0 = steiner::centroid(t);
    const auto mid = steiner::side_midpoints(t);
    const auto refl = steiner::reflected_tangency_points(t);

    // Involution.
    const Complex c{unit(gen.rng()), unit(gen.rng())};
    CHECK(std::abs(steiner::reflect_in_point(steiner::reflect_in_point(v[0], c), c) - v[0]) <=
          1e-13 * s);

    // -2 homothety sends each midpoint to the opposite vertex.
    CHECK(std::abs(steiner::homothety(mid[0], z0, -2.0) - v[2]) <= 1e-12 * s);
    CHECK(std::abs(steiner::homothety(mid[1], z0, -2.0) - v[1]) <= 1e-12 * s);
    CHECK(std::abs(steiner::homothety(mid[2], z0, -2.0) - v[0]) <= 1e-12 * s);

    // Closed-form reflections agree with reflect_in_point.
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(std::abs(refl[k] - steiner::reflect_in_point(mid[k], z0)) <= 1e-12 * s);
    }

    // Permutation invariance of the collinearity test, including near misses.
    const Complex near_line = 0.5 * (v[0] + v[1]) + Complex{0.0, 1e-10 * unit(gen.rng())};
    for (const Complex& third : {v[2], near_line}) {
      const bool ref = steiner::is_collinear(v[0], v[1], third);
      CHECK(steiner::is_collinear(v[0], third, v[1]) == ref);
      CHECK(steiner::is_collinear(v[1], v[0], third) == ref);
      CHECK(steiner::is_collinear(v[1], third, v[0]) == ref);
      CHECK(steiner::is_collinear(third, v[0], v[1]) == ref);
      CHECK(steiner::is_collinear(third, v[1], v[0]) == ref);
    }

    // The square contains every vertex with at least 0.5 to spare.
    const auto sq = steiner::bounding_square(t);
    CHECK(sq.xmax - sq.xmin == doctest::Approx(sq.ymax - sq.ymin));
    for (const Complex& p : v) {
      CHECK(p.real() - sq.xmin >= 0.5 - 1e-12);
      CHECK(sq.xmax - p.real() >= 0.5 - 1e-12);
      CHECK(p.imag() - sq.ymin >= 0.5 - 1e-12);
      CHECK(sq.ymax - p.imag() >= 0.5 - 1e-12);
    }

    // Centroid commutes with similarities.
    const Complex alpha{unit(gen.rng()), unit(gen.rng())};
    const Complex beta{unit(gen.rng()), unit(gen.rng())};
    const Triangle mapped =
        Triangle::make(alpha * v[0] + beta, alpha * v[1] + beta, alpha * v[2] + beta);
    const Complex expected = alpha * z0 + beta;
    CHECK(std::abs(steiner::centroid(mapped) - expected) <=
          1e-12 * (std::abs(alpha) * s + std::abs(beta) + 1.0));
  }
}
