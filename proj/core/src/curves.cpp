#include "scgeo/curves.hpp"

#include <cmath>
#include <stdexcept>

#include "scgeo/rng.hpp"

namespace scgeo {

SelfContractedReport is_self_contracted(const NormModel& norm, const std::vector<Vec2>& pts,
                                        double tol) {
  if (pts.size() < 2) throw std::invalid_argument("is_self_contracted: need >= 2 vertices");
  SelfContractedReport rep;
  rep.defect = -HUGE_VAL;
  const std::size_t n = pts.size();
  for (std::size_t k = 2; k < n; ++k) {
    double prev = norm.evaluate(pts[0] - pts[k]);
    for (std::size_t i = 1; i < k; ++i) {
      const double cur = norm.evaluate(pts[i] - pts[k]);
      const double defect = cur - prev;  // must be <= 0
      if (defect > rep.defect) {
        rep.defect = defect;
        rep.i = i - 1;
        rep.j = i;
        rep.k = k;
      }
      ++rep.checked_triples;
      prev = cur;
    }
  }
  if (rep.checked_triples == 0) {  // n == 2: nothing to compare
    rep.defect = 0.0;
    rep.k = 1;
  }
  rep.is_sc = rep.defect <= tol;
  return rep;
}

double length(const std::vector<Vec2>& pts) {
  double s = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) s += edist(pts[i - 1], pts[i]);
  return s;
}

double triple_cosine_check(const NormModel& norm, const std::vector<Vec2>& pts, double alpha0) {
  if (!is_self_contracted(norm, pts).is_sc)
    throw std::invalid_argument("triple_cosine_check: curve is not self-contracted");
  const std::size_t n = pts.size();
  double best = 1.0;
  std::vector<Vec2> dirs;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    dirs.clear();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec2 u = pts[j] - pts[i];
      const double r = enorm(u);
      if (r > 0.0) dirs.push_back(u / r);
    }
    for (std::size_t a = 0; a < dirs.size(); ++a)
      for (std::size_t b = a + 1; b < dirs.size(); ++b)
        best = std::min(best, dot(dirs[a], dirs[b]));
  }
  if (best < -std::cos(alpha0) - 1e-9)
    throw std::runtime_error("triple_cosine_check: cosine bound violated");
  return best;
}

GreedyResult generate_greedy(const NormModel& norm, int n, double step, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_greedy: n must be >= 2");
  if (!(step > 0.0)) throw std::invalid_argument("generate_greedy: step must be > 0");
  GreedyResult res;
  SplitMix64 rng(seed);
  std::vector<Vec2>& pts = res.curve.vertices;
  pts.push_back({0.0, 0.0});
  const double step0 = step;
  int rejections = 0;
  while (static_cast<int>(pts.size()) < n) {
    const double phi = 2.0 * M_PI * rng.next_double();
    const Vec2 z = pts.back() + step * Vec2{std::cos(phi), std::sin(phi)};
    ++res.proposals;
    bool ok = true;
    // appending z adds exactly the constraints ||g_i - z|| >= ||g_{i+1} - z||
    double prev = norm.evaluate(pts[0] - z);
    for (std::size_t i = 1; ok && i < pts.size(); ++i) {
      const double cur = norm.evaluate(pts[i] - z);
      ok = prev >= cur;
      prev = cur;
    }
    if (ok) {
      pts.push_back(z);
      ++res.accepted;
      rejections = 0;
    } else if (++rejections == 200) {
      step *= 0.5;
      rejections = 0;
      ++res.halvings;
      if (step < 1e-12 * step0) {
        res.truncated = true;
        break;
      }
    }
  }
  res.curve.params.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) res.curve.params[i] = static_cast<double>(i);
  return res;
}

TimedPolyline generate_gradient_descent(const QuadraticPotential& f, Vec2 x0, double h, int n) {
  if (n < 1) throw std::invalid_argument("generate_gradient_descent: n must be >= 1");
  const double tr = f.qxx + f.qyy;
  const double det = f.qxx * f.qyy - f.qxy * f.qxy;
  if (!(f.qxx > 0.0) || !(det > 0.0))
    throw std::invalid_argument("generate_gradient_descent: potential must be positive definite");
  const double lam_max = 0.5 * (tr + std::sqrt(tr * tr - 4.0 * det));
  if (!(h > 0.0) || !(h * lam_max < 2.0))
    throw std::invalid_argument("generate_gradient_descent: step outside stability bound");

  TimedPolyline out;
  Vec2 z = x0;
  const double guard = 1e6 * std::max(1.0, enorm(x0));
  for (int k = 0; k < n; ++k) {
    if (enorm(z) > guard) throw std::runtime_error("generate_gradient_descent: divergence");
    if (!out.vertices.empty() && z.x == out.vertices.back().x && z.y == out.vertices.back().y)
      break;  // reached the minimizer exactly; params must stay duplicate-free
    out.vertices.push_back(z);
    out.params.push_back(k * h);
    z = z - h * Vec2{f.qxx * z.x + f.qxy * z.y, f.qxy * z.x + f.qyy * z.y};
  }
  return out;
}

}  // namespace scgeo
