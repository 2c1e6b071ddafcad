#include "scgeo/convex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scgeo {
namespace {

// pop test for the monotone chain: turn through o->a->b is not strictly left
bool not_left_turn(Vec2 o, Vec2 a, Vec2 b) {
  const Vec2 u = a - o, v = b - o;
  return cross(u, v) <= 1e-12 * enorm(u) * enorm(v);
}

}  // namespace

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const size_t n = pts.size();
  if (n <= 2) return pts;

  std::vector<Vec2> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && not_left_turn(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && not_left_turn(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

double diameter(const std::vector<Vec2>& pts) {
  const std::vector<Vec2> h = convex_hull(pts);
  const size_t m = h.size();
  if (m < 2) return 0.0;
  if (m == 2) return edist(h[0], h[1]);
  // rotating calipers: advance the antipodal vertex j for each edge (i, i+1)
  auto area2 = [&](size_t i, size_t j, size_t l) {
    return std::abs(cross(h[j] - h[i], h[l] - h[i]));
  };
  double best = 0.0;
  size_t j = 1;
  for (size_t i = 0; i < m; ++i) {
    const size_t ni = (i + 1) % m;
    while (area2(i, ni, (j + 1) % m) > area2(i, ni, j)) j = (j + 1) % m;
    best = std::max({best, edist(h[i], h[j]), edist(h[ni], h[j])});
  }
  return best;
}

double perimeter(const std::vector<Vec2>& hull) {
  const size_t m = hull.size();
  if (m < 2) return 0.0;
  double s = 0.0;
  for (size_t i = 0; i < m; ++i) s += edist(hull[i], hull[(i + 1) % m]);
  return s;
}

double mean_width(const std::vector<Vec2>& pts, int quadrature_n) {
  if (quadrature_n < 360) throw std::invalid_argument("mean_width: quadrature_n must be >= 360");
  const std::vector<Vec2> h = convex_hull(pts);
  if (h.empty()) return 0.0;
  if (h.size() == 1) return 0.0;
  // W = (1/pi) * integral over [0, 2pi) of the support function (midpoint rule)
  double acc = 0.0;
  for (int k = 0; k < quadrature_n; ++k) {
    const double th = 2.0 * M_PI * (k + 0.5) / quadrature_n;
    const Vec2 u{std::cos(th), std::sin(th)};
    double sup = dot(h[0], u);
    for (size_t i = 1; i < h.size(); ++i) sup = std::max(sup, dot(h[i], u));
    acc += sup;
  }
  return 2.0 * acc / quadrature_n;
}

double mean_width_exact(const std::vector<Vec2>& hull) { return perimeter(hull) / M_PI; }

}  // namespace scgeo
