#include "scgeo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "scgeo/convex.hpp"

namespace scgeo {
namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

SvgCanvas::SvgCanvas(Vec2 lo, Vec2 hi, int width_px) {
  const Vec2 span = hi - lo;
  const double margin = 0.05 * std::max(span.x, span.y);
  lo_ = lo - Vec2{margin, margin};
  hi_ = hi + Vec2{margin, margin};
  w_ = width_px;
  scale_ = w_ / (hi_.x - lo_.x);
  h_ = static_cast<int>(std::ceil((hi_.y - lo_.y) * scale_));
}

Vec2 SvgCanvas::map(Vec2 p) const {
  return {(p.x - lo_.x) * scale_, (hi_.y - p.y) * scale_};
}

void SvgCanvas::polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                         double width_px, bool closed) {
  body_ += closed ? "<polygon points=\"" : "<polyline points=\"";
  for (Vec2 p : pts) {
    const Vec2 q = map(p);
    body_ += px(q.x) + "," + px(q.y) + " ";
  }
  body_ += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + px(width_px) + "\"/>\n";
}

void SvgCanvas::line(Vec2 a, Vec2 b, const std::string& stroke, double width_px, bool dashed) {
  const Vec2 p = map(a), q = map(b);
  body_ += "<line x1=\"" + px(p.x) + "\" y1=\"" + px(p.y) + "\" x2=\"" + px(q.x) + "\" y2=\"" +
           px(q.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + px(width_px) + "\"";
  if (dashed) body_ += " stroke-dasharray=\"6 4\"";
  body_ += "/>\n";
}

void SvgCanvas::dot(Vec2 c, double radius_px, const std::string& fill) {
  const Vec2 q = map(c);
  body_ += "<circle cx=\"" + px(q.x) + "\" cy=\"" + px(q.y) + "\" r=\"" + px(radius_px) +
           "\" fill=\"" + fill + "\"/>\n";
}

void SvgCanvas::text(Vec2 at, const std::string& s, const std::string& fill) {
  const Vec2 q = map(at);
  body_ += "<text x=\"" + px(q.x) + "\" y=\"" + px(q.y) + "\" font-size=\"12\" fill=\"" + fill +
           "\" font-family=\"sans-serif\">" + s + "</text>\n";
}

std::string SvgCanvas::str() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                    std::to_string(w_) + " " + std::to_string(h_) + "\" width=\"" +
                    std::to_string(w_) + "\" height=\"" + std::to_string(h_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

std::string plot_bisector_svg(const NormModel& norm, const BisectorTrace& trace) {
  const Segment& seg = trace.segment;
  const Vec2 mid = 0.5 * (seg.a + seg.b);
  const double len = norm.evaluate(seg.b - seg.a);
  const Vec2 vhat = (seg.b - seg.a) / len;

  // ball through a and b: the norm sphere of radius |b-a|/2 about the midpoint
  std::vector<Vec2> ball;
  for (int k = 0; k <= 256; ++k)
    ball.push_back(mid + (0.5 * len) * norm.sphere_point(2.0 * M_PI * k / 256));

  Vec2 lo = seg.a, hi = seg.a;
  auto grow = [&](Vec2 p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  };
  grow(seg.b);
  for (Vec2 p : ball) grow(p);
  for (Vec2 p : trace.samples) grow(p);

  SvgCanvas svg(lo, hi);
  svg.polyline(ball, "#bbbbbb", 1.0, true);
  svg.line(seg.a, seg.b, "#222222", 1.5);
  const Vec2 w = trace.asymptote.dir;
  const double reach = 2.0 * std::max(hi.x - lo.x, hi.y - lo.y);
  svg.line(mid - reach * w, mid + reach * w, "#2a7f2a", 1.0, true);
  const Vec2 off = (trace.kappa_used * len) * vhat;  // strip boundary offset in the oblique frame
  svg.line(mid + off - reach * w, mid + off + reach * w, "#c04040", 0.8, true);
  svg.line(mid - off - reach * w, mid - off + reach * w, "#c04040", 0.8, true);
  svg.polyline(trace.samples, "#1f4fbf", 1.5);
  svg.dot(seg.a, 3.0, "#222222");
  svg.dot(seg.b, 3.0, "#222222");
  svg.text(seg.a, "a");
  svg.text(seg.b, "b");
  return svg.str();
}

std::string plot_curve_svg(const std::vector<Vec2>& pts, bool with_hull) {
  Vec2 lo = pts.front(), hi = pts.front();
  for (Vec2 p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  SvgCanvas svg(lo, hi);
  if (with_hull) svg.polyline(convex_hull(pts), "#c08030", 1.0, true);
  svg.polyline(pts, "#1f4fbf", 1.2);
  svg.dot(pts.front(), 3.0, "#2a7f2a");
  svg.dot(pts.back(), 3.0, "#c04040");
  return svg.str();
}

}  // namespace scgeo
