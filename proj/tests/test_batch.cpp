#include <doctest.h>

#include <cstring>
#include <variant>

#include "oracles.hpp"
#include "steiner/batch.hpp"

using steiner::Complex;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }
bool same_bits(Complex a, Complex b) { return same_bits(a.real(), b.real()) && same_bits(a.imag(), b.imag()); }

bool identical(const steiner::SteinerEllipse& x, const steiner::SteinerEllipse& y) {
  const auto cx = x.conic.as_array(), cy = y.conic.as_array();
  for (std::size_t k = 0; k < 6; ++k) {
    if (!same_bits(cx[k], cy[k])) return false;
  }
  return same_bits(x.geometry.f1, y.geometry.f1) && same_bits(x.geometry.f2, y.geometry.f2) &&
         same_bits(x.geometry.a, y.geometry.a) && same_bits(x.geometry.b, y.geometry.b) &&
         same_bits(x.geometry.theta, y.geometry.theta);
}

}  // namespace

TEST_CASE("parallel batch matches the serial reference exactly") {
  oracle::TriangleGenerator gen(42);
  std::vector<steiner::TriangleInput> inputs;
  for (int i = 0; i < 2000; ++i) inputs.push_back(gen.next());
  inputs[17] = {0.0, Complex{1, 1}, Complex{2, 2}};
  inputs[1500] = {Complex{3, 3}, Complex{3, 3}, Complex{0, 1}};

  const auto serial = steiner::evaluate_batch_serial(inputs);
  const auto parallel = steiner::evaluate_batch_parallel(inputs);
  REQUIRE(serial.size() == inputs.size());
  REQUIRE(parallel.size() == inputs.size());

  for (std::size_t i = 0; i < inputs.size(); ++i) {
    REQUIRE(serial[i].index() == parallel[i].index());
    if (const auto* s = std::get_if<steiner::SteinerReport>(&serial[i])) {
      const auto& p = std::get<steiner::SteinerReport>(parallel[i]);
      CHECK(identical(s->in, p.in));
      CHECK(identical(s->circum, p.circum));
    } else {
      CHECK(std::get<steiner::BatchFailure>(serial[i]).kind ==
            std::get<steiner::BatchFailure>(parallel[i]).kind);
    }
  }
  CHECK(std::get<steiner::BatchFailure>(parallel[17]).kind == steiner::ErrorKind::Collinear);
  CHECK(std::get<steiner::BatchFailure>(parallel[1500]).kind == steiner::ErrorKind::Collinear);
}

TEST_CASE("empty batch") {
  CHECK(steiner::evaluate_batch_parallel({}).empty());
  CHECK(steiner::evaluate_batch_serial({}).empty());
}
