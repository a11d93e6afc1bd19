#include "steiner/report_json.hpp"

#include <stdexcept>

namespace steiner {

using nlohmann::json;

namespace {

json point(Complex z) { return json::array({z.real(), z.imag()}); }

Complex read_point(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json ellipse_to_json(const SteinerEllipse& e) {
  const auto& g = e.geometry;
  return {
      {"conic", e.conic.as_array()},
      {"foci", json::array({point(g.f1), point(g.f2)})},
      {"center", point(g.center)},
      {"a", g.a},
      {"b", g.b},
      {"ecc", g.ecc},
      {"theta", g.theta},
  };
}

SteinerEllipse ellipse_from_json(const json& j) {
  SteinerEllipse e;
  e.conic = ConicCoefficients::from_array(j.at("conic").get<std::array<double, 6>>());
  e.geometry.f1 = read_point(j.at("foci").at(0));
  e.geometry.f2 = read_point(j.at("foci").at(1));
  e.geometry.center = read_point(j.at("center"));
  e.geometry.a = j.at("a").get<double>();
  e.geometry.b = j.at("b").get<double>();
  e.geometry.ecc = j.at("ecc").get<double>();
  e.geometry.theta = j.at("theta").get<double>();
  return e;
}

}  // namespace

json triangle_to_json(const TriangleInput& input) {
  return {{"z1", point(input[0])}, {"z2", point(input[1])}, {"z3", point(input[2])}};
}

TriangleInput triangle_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("triangle entry must be an object");
  TriangleInput t;
  const char* keys[] = {"z1", "z2", "z3"};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!j.contains(keys[k])) throw std::invalid_argument(std::string("missing ") + keys[k]);
    t[k] = read_point(j.at(keys[k]));
  }
  return t;
}

json report_to_json(const SteinerReport& r) {
  const auto& m = r.tangency.midpoints;
  const auto& rf = r.tangency.reflected;
  return {
      {"triangle", triangle_to_json(r.triangle.vertices())},
      {"in", ellipse_to_json(r.in)},
      {"circum", ellipse_to_json(r.circum)},
      {"tangency_points",
       {{"zE1", point(m[0])},
        {"zE2", point(m[1])},
        {"zE3", point(m[2])},
        {"zE1r", point(rf[0])},
        {"zE2r", point(rf[1])},
        {"zE3r", point(rf[2])}}},
      {"circum_points", {{"zEc4", point(r.circum_extra[0])}, {"zEc5", point(r.circum_extra[1])}}},
  };
}

SteinerReport report_from_json(const json& j) {
  const TriangleInput v = triangle_from_json(j.at("triangle"));
  const json& tp = j.at("tangency_points");
  const json& cp = j.at("circum_points");
  return SteinerReport{
      Triangle::make(v[0], v[1], v[2]),
      ellipse_from_json(j.at("in")),
      ellipse_from_json(j.at("circum")),
      TangencyPoints{{read_point(tp.at("zE1")), read_point(tp.at("zE2")), read_point(tp.at("zE3"))},
                     {read_point(tp.at("zE1r")), read_point(tp.at("zE2r")),
                      read_point(tp.at("zE3r"))}},
      {read_point(cp.at("zEc4")), read_point(cp.at("zEc5"))},
  };
}

json failure_to_json(const TriangleInput& input, const BatchFailure& failure) {
  return {{"triangle", triangle_to_json(input)},
          {"error", to_string(failure.kind)},
          {"message", failure.message}};
}

}  // namespace steiner
