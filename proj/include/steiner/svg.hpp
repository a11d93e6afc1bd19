#pragma once

#include <array>
#include <string>
#include <vector>

#include "steiner/plane_geometry.hpp"
#include "steiner/steiner.hpp"

namespace steiner {

enum class EllipseSelection { In, Circum, Both };
enum class EllipseRole { In, Circum };
enum class MarkerStyle { Vertex, Center, FocusIn, FocusCircum };

const char* to_string(EllipseSelection which);
const char* to_string(EllipseRole role);

struct SceneEllipse {
  EllipseGeometry geometry;
  EllipseRole role;
};

struct Marker {
  Complex position;
  std::string label;
  MarkerStyle style;
};

// Straight segment drawn between the foci of an ellipse.
struct Segment {
  Complex from;
  Complex to;
  EllipseRole role;
};

inline constexpr double kDefaultFociThreshold = 0.1;

struct PlotScene {
  BoundingSquare square;
  Triangle triangle;
  std::vector<SceneEllipse> ellipses;
  std::vector<Marker> markers;
  std::vector<Segment> segments;
  std::string title;
  double show_foci_threshold = kDefaultFociThreshold;
};

// Affine map between plane coordinates inside the scene square and SVG
// pixels. The y axis is flipped so that +im points up on screen.
class PixelMap {
 public:
  static constexpr double kCanvas = 900.0;
  static constexpr double kMargin = 60.0;

  explicit PixelMap(const BoundingSquare& square);

  std::array<double, 2> to_pixel(Complex z) const;
  Complex to_plane(double px, double py) const;
  // Pixels per plane unit.
  double scale() const { return scale_; }

 private:
  BoundingSquare square_;
  double scale_;
};

// Fixed 2-decimal formatting used in titles and console reports ("%3.2f").
std::string format_fixed2(double value);
std::string format_complex2(Complex z);

// Foci (and the focal segment) of an ellipse are drawn only when its
// eccentricity exceeds show_foci_threshold. The square is grown, keeping its
// center, until each ellipse's bounding box fits with a 5% margin.
PlotScene build_scene(const SteinerReport& report, EllipseSelection which,
                      double show_foci_threshold = kDefaultFociThreshold);

// SVG 1.1 document, 900x900, inline styling only. Byte-identical output for
// identical scenes.
std::string render(const PlotScene& scene);

}  // namespace steiner
