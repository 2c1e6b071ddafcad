#pragma once

#include <string>
#include <vector>

#include "scgeo/bisector.hpp"
#include "scgeo/norm.hpp"
#include "scgeo/vec2.hpp"

namespace scgeo {

// Minimal static SVG builder; data coordinates in, pixel viewport out
// (y axis flipped once at construction, no transforms in the output).
class SvgCanvas {
 public:
  SvgCanvas(Vec2 lo, Vec2 hi, int width_px = 720);
  void polyline(const std::vector<Vec2>& pts, const std::string& stroke, double width_px,
                bool closed = false);
  void line(Vec2 a, Vec2 b, const std::string& stroke, double width_px, bool dashed = false);
  void dot(Vec2 c, double radius_px, const std::string& fill);
  void text(Vec2 at, const std::string& s, const std::string& fill = "#444");
  std::string str() const;

 private:
  Vec2 map(Vec2 p) const;
  Vec2 lo_, hi_;
  double scale_ = 1.0;
  int w_ = 0, h_ = 0;
  std::string body_;
};

// Ball through a and b, the segment, the traced bisector, its asymptote, and
// the kappa-strip boundaries.
std::string plot_bisector_svg(const NormModel& norm, const BisectorTrace& trace);

// Curve polyline with start/end markers and optional convex hull overlay.
std::string plot_curve_svg(const std::vector<Vec2>& pts, bool with_hull);

}  // namespace scgeo
