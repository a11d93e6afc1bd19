#include "steiner/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace steiner {

const char* to_string(EllipseSelection which) {
  switch (which) {
    case EllipseSelection::In:
      return "in";
    case EllipseSelection::Circum:
      return "circum";
    case EllipseSelection::Both:
      return "both";
  }
  return "both";
}

const char* to_string(EllipseRole role) { return role == EllipseRole::In ? "in" : "circum"; }

PixelMap::PixelMap(const BoundingSquare& square)
    : square_(square), scale_((kCanvas - 2.0 * kMargin) / square.side()) {}

std::array<double, 2> PixelMap::to_pixel(Complex z) const {
  return {kMargin + (z.real() - square_.xmin) * scale_,
          kMargin + (square_.ymax - z.imag()) * scale_};
}

Complex PixelMap::to_plane(double px, double py) const {
  return {square_.xmin + (px - kMargin) / scale_, square_.ymax - (py - kMargin) / scale_};
}

std::string format_fixed2(double value) {
  std::string s = fmt::format("{:.2f}", value);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string format_complex2(Complex z) {
  std::string im = format_fixed2(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_fixed2(z.real()) + im + "i";
}

namespace {

// Half extents of the axis-aligned bounding box of an ellipse.
std::array<double, 2> half_extents(const EllipseGeometry& g) {
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  return {std::hypot(g.a * c, g.b * s), std::hypot(g.a * s, g.b * c)};
}

std::string single_title(const char* kind, const EllipseGeometry& g) {
  return fmt::format("Steiner {} ellipse of triangle z1, z2, z3, zF1={}, zF2={}, z0={}, a={}, b={}, e={}",
                     kind, format_complex2(g.f1), format_complex2(g.f2),
                     format_complex2(g.center), format_fixed2(g.a), format_fixed2(g.b),
                     format_fixed2(g.ecc));
}

void add_foci(PlotScene& scene, const EllipseGeometry& g, EllipseRole role, bool suffixed) {
  if (!(g.ecc > scene.show_foci_threshold)) return;
  const MarkerStyle style = role == EllipseRole::In ? MarkerStyle::FocusIn : MarkerStyle::FocusCircum;
  const std::string suffix = !suffixed ? "" : (role == EllipseRole::In ? "i" : "c");
  scene.markers.push_back({g.f1, "zF1" + suffix, style});
  scene.markers.push_back({g.f2, "zF2" + suffix, style});
  scene.segments.push_back({g.f1, g.f2, role});
}

}  // namespace

PlotScene build_scene(const SteinerReport& report, EllipseSelection which,
                      double show_foci_threshold) {
  PlotScene scene{bounding_square(report.triangle), report.triangle, {}, {}, {}, {},
                  show_foci_threshold};

  const bool want_in = which != EllipseSelection::Circum;
  const bool want_circum = which != EllipseSelection::In;
  if (want_in) scene.ellipses.push_back({report.in.geometry, EllipseRole::In});
  if (want_circum) scene.ellipses.push_back({report.circum.geometry, EllipseRole::Circum});

  const Complex mid = scene.square.center();
  double half = 0.5 * scene.square.side();
  for (const SceneEllipse& e : scene.ellipses) {
    const auto ext = half_extents(e.geometry);
    half = std::max({half, std::abs(e.geometry.center.real() - mid.real()) + 1.05 * ext[0],
                     std::abs(e.geometry.center.imag() - mid.imag()) + 1.05 * ext[1]});
  }
  scene.square = {mid.real() - half, mid.imag() - half, mid.real() + half, mid.imag() + half};

  const auto& v = report.triangle.vertices();
  scene.markers.push_back({v[0], "z1", MarkerStyle::Vertex});
  scene.markers.push_back({v[1], "z2", MarkerStyle::Vertex});
  scene.markers.push_back({v[2], "z3", MarkerStyle::Vertex});
  scene.markers.push_back({centroid(report.triangle), "z0", MarkerStyle::Center});

  switch (which) {
    case EllipseSelection::In:
      add_foci(scene, report.in.geometry, EllipseRole::In, false);
      scene.title = single_title("in", report.in.geometry);
      break;
    case EllipseSelection::Circum:
      add_foci(scene, report.circum.geometry, EllipseRole::Circum, false);
      scene.title = single_title("circum", report.circum.geometry);
      break;
    case EllipseSelection::Both:
      add_foci(scene, report.in.geometry, EllipseRole::In, true);
      add_foci(scene, report.circum.geometry, EllipseRole::Circum, true);
      scene.title =
          "Steiner in-ellipse red (foci zF1i, zF2i) and Steiner circum-ellipse blue (foci zF1c, zF2c)";
      break;
  }
  return scene;
}

namespace {

std::string num(double v) { return fmt::format("{:.12g}", v); }

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* role_color(EllipseRole role) { return role == EllipseRole::In ? "red" : "blue"; }

// Smallest step from 1, 2, 5, 10, 20, ... giving at most 40 grid lines.
long grid_step(double side) {
  long step = 1;
  const std::array<long, 3> mantissa{1, 2, 5};
  for (long decade = 1;; decade *= 10) {
    for (long m : mantissa) {
      step = m * decade;
      if (side / static_cast<double>(step) <= 40.0) return step;
    }
  }
}

}  // namespace

std::string render(const PlotScene& scene) {
  const PixelMap map(scene.square);
  const double lo = PixelMap::kMargin;
  const double hi = PixelMap::kCanvas - PixelMap::kMargin;
  std::string out;
  auto emit = [&out](const std::string& line) {
    out += line;
    out += '\n';
  };

  emit(R"(<?xml version="1.0" encoding="UTF-8"?>)");
  emit(R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="900" height="900" viewBox="0 0 900 900">)");
  emit(R"(<rect x="0" y="0" width="900" height="900" fill="white"/>)");

  const long step = grid_step(scene.square.side());
  const auto first = [step](double v) {
    return static_cast<long>(std::ceil(v / static_cast<double>(step))) * step;
  };
  emit(R"(<g class="grid" stroke="#d0d0d0" stroke-width="1">)");
  for (long k = first(scene.square.xmin); static_cast<double>(k) <= scene.square.xmax; k += step) {
    const double px = map.to_pixel({static_cast<double>(k), 0.0})[0];
    emit(fmt::format(R"(<line x1="{}" y1="{}" x2="{}" y2="{}"{}/>)", num(px), num(lo), num(px),
                     num(hi), k == 0 ? R"( stroke="#808080")" : ""));
  }
  for (long k = first(scene.square.ymin); static_cast<double>(k) <= scene.square.ymax; k += step) {
    const double py = map.to_pixel({0.0, static_cast<double>(k)})[1];
    emit(fmt::format(R"(<line x1="{}" y1="{}" x2="{}" y2="{}"{}/>)", num(lo), num(py), num(hi),
                     num(py), k == 0 ? R"( stroke="#808080")" : ""));
  }
  emit("</g>");

  emit(R"(<g class="ticks" font-family="sans-serif" font-size="11" fill="#404040">)");
  for (long k = first(scene.square.xmin); static_cast<double>(k) <= scene.square.xmax; k += step) {
    const double px = map.to_pixel({static_cast<double>(k), 0.0})[0];
    emit(fmt::format(R"(<text x="{}" y="{}" text-anchor="middle">{}</text>)", num(px),
                     num(hi + 16.0), k));
  }
  for (long k = first(scene.square.ymin); static_cast<double>(k) <= scene.square.ymax; k += step) {
    const double py = map.to_pixel({0.0, static_cast<double>(k)})[1];
    emit(fmt::format(R"(<text x="{}" y="{}" text-anchor="end">{}</text>)", num(lo - 6.0),
                     num(py + 4.0), k));
  }
  emit("</g>");
  emit(fmt::format(R"(<rect class="frame" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>)",
                   num(lo), num(lo), num(hi - lo), num(hi - lo)));

  std::string pts;
  for (const Complex& v : scene.triangle.vertices()) {
    const auto p = map.to_pixel(v);
    if (!pts.empty()) pts += ' ';
    pts += num(p[0]) + "," + num(p[1]);
  }
  emit(fmt::format(R"(<polygon class="triangle" points="{}" fill="none" stroke="black" stroke-width="1.5"/>)",
                   pts));

  for (const SceneEllipse& e : scene.ellipses) {
    const auto c = map.to_pixel(e.geometry.center);
    const double deg = -e.geometry.theta * 180.0 / std::numbers::pi;
    emit(fmt::format(
        R"svg(<ellipse class="ellipse {}" cx="{}" cy="{}" rx="{}" ry="{}" transform="rotate({} {} {})" fill="none" stroke="{}" stroke-width="1.5"/>)svg",
        to_string(e.role), num(c[0]), num(c[1]), num(e.geometry.a * map.scale()),
        num(e.geometry.b * map.scale()), num(deg), num(c[0]), num(c[1]), role_color(e.role)));
  }

  for (const Segment& s : scene.segments) {
    const auto a = map.to_pixel(s.from);
    const auto b = map.to_pixel(s.to);
    emit(fmt::format(R"(<line class="focal-segment {}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}"/>)",
                     to_string(s.role), num(a[0]), num(a[1]), num(b[0]), num(b[1]),
                     role_color(s.role)));
  }

  emit(R"(<g class="labels" font-family="sans-serif" font-size="13">)");
  for (const Marker& m : scene.markers) {
    const auto p = map.to_pixel(m.position);
    switch (m.style) {
      case MarkerStyle::Vertex:
        break;
      case MarkerStyle::Center:
        emit(fmt::format(R"(<circle class="marker center" cx="{}" cy="{}" r="4" fill="none" stroke="green"/>)",
                         num(p[0]), num(p[1])));
        break;
      case MarkerStyle::FocusIn:
      case MarkerStyle::FocusCircum: {
        const EllipseRole role =
            m.style == MarkerStyle::FocusIn ? EllipseRole::In : EllipseRole::Circum;
        emit(fmt::format(R"(<circle class="marker focus {}" cx="{}" cy="{}" r="4" fill="none" stroke="{}"/>)",
                         to_string(role), num(p[0]), num(p[1]), role_color(role)));
        break;
      }
    }
    emit(fmt::format(R"(<text x="{}" y="{}">{}</text>)", num(p[0] + 6.0), num(p[1] - 6.0),
                     xml_escape(m.label)));
  }
  emit("</g>");

  emit(fmt::format(R"(<text class="title" x="450" y="30" text-anchor="middle" font-family="sans-serif" font-size="14">{}</text>)",
                   xml_escape(scene.title)));
  emit("</svg>");
  return out;
}

}  // namespace steiner
