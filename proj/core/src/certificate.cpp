#include "scgeo/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scgeo/bisector.hpp"
#include "scgeo/convex.hpp"
#include "scgeo/curves.hpp"

namespace scgeo {

ConstantsBundle derive_constants_from(double alpha0, double kappa) {
  if (!(alpha0 > 0.0)) throw std::invalid_argument("derive_constants: alpha0 must be > 0");
  if (!(kappa >= 0.0 && kappa < 0.5))
    throw std::invalid_argument("derive_constants: kappa must be in [0, 1/2)");
  ConstantsBundle b;
  b.alpha0 = alpha0;
  b.kappa = kappa;
  b.lambda = 0.5 - kappa;
  b.tau1 = std::sin(alpha0);
  b.mu = std::min(0.25, std::sin(alpha0 / 2.0) / 4.0);
  b.eps0 = std::min({b.tau1 / 6.0, b.mu / 3.0, b.lambda / 12.0});
  b.tau = std::min({b.mu, b.lambda / 4.0, b.eps0 / 2.0});
  b.delta = std::min(b.tau, b.tau1 / 4.0);
  b.c0 = (b.lambda * b.tau / 4.0) * std::asin(b.delta / 2.0) / M_PI;
  b.C = 1.0 / b.c0;
  if (!(b.c0 > 0.0)) throw std::runtime_error("derive_constants: degenerate constant chain");
  return b;
}

ConstantsBundle derive_constants(const NormModel& norm) {
  return derive_constants_from(norm.alpha0(), kappa_estimate(norm));
}

std::vector<Vec2> tail_hull(const std::vector<Vec2>& pts, std::size_t index) {
  if (index >= pts.size()) throw std::invalid_argument("tail_hull: index out of range");
  return convex_hull({pts.begin() + static_cast<std::ptrdiff_t>(index), pts.end()});
}

PairCertificate separating_vector(const NormModel& norm, const std::vector<Vec2>& pts,
                                  std::size_t i, std::size_t j, const ConstantsBundle& bundle) {
  if (!(i < j && j < pts.size()))
    throw std::invalid_argument("separating_vector: need i < j < curve size");
  PairCertificate cert;
  cert.i = i;
  cert.j = j;
  cert.xprime = pts[i];
  cert.x = pts[j];
  const Vec2 v = cert.xprime - cert.x;
  const double d = enorm(v);
  if (!(d > 1e-12)) throw std::invalid_argument("separating_vector: pair closer than 1e-12");
  cert.v0 = v / d;

  const Vec2 w = norm.dual_direction(cert.v0).line_direction;
  Vec2 nu = perp(w);
  if (dot(nu, cert.v0) < 0.0) nu = -nu;
  cert.nu = nu;
  cert.x0 = cert.xprime - (bundle.lambda / 2.0 * d) * cert.v0;

  const Vec2 v0p = perp(cert.v0);
  bool has_plus = false, has_minus = false;
  double tail1_max = -HUGE_VAL;
  for (std::size_t k = j; k < pts.size(); ++k) {
    const Vec2 dy = pts[k] - cert.x0;
    tail1_max = std::max(tail1_max, dot(dy, nu) / d);
    const double r = std::max(enorm(dy), 1e-300);
    const double xi_nu = dot(dy, nu) / r;
    if (xi_nu > -2.0 * bundle.mu && r > d) {  // outside B(x0,d), short of the H1 band
      (dot(dy, v0p) >= 0.0 ? has_plus : has_minus) = true;
    }
  }
  cert.tail1_max = tail1_max / (bundle.lambda / 2.0);
  cert.tail1 = cert.tail1_max <= -1.0 + 1e-9;
  cert.lemma_violation = has_plus && has_minus;

  const double e = has_plus ? -bundle.eps0 : bundle.eps0;
  cert.nu_bar = normalized(nu + e * perp(nu));
  cert.cl20_value = dot(cert.nu_bar, cert.v0);
  cert.cl20 = cert.cl20_value >= bundle.tau1 / 2.0;

  double cl21_max = -HUGE_VAL;
  for (std::size_t k = j; k < pts.size(); ++k) {
    const Vec2 dy = pts[k] - cert.x0;
    const double r = std::max(enorm(dy), 1e-300);
    cl21_max = std::max(cl21_max, dot(dy, cert.nu_bar) / r);
  }
  cert.cl21_max = cl21_max;
  cert.cl21 = cl21_max <= -bundle.delta;
  return cert;
}

DecrementReport width_decrement_check(const std::vector<Vec2>& pts, const NormModel& norm,
                                      const ConstantsBundle& bundle, std::size_t pair_stride) {
  if (pts.size() < 2) throw std::invalid_argument("width_decrement_check: need >= 2 vertices");
  if (pair_stride == 0) throw std::invalid_argument("width_decrement_check: stride must be >= 1");
  (void)norm;  // widths and distances are Euclidean; norm reserved for report context
  const double dscale = diameter(pts);
  if (!(dscale > 0.0)) throw std::invalid_argument("width_decrement_check: degenerate curve");

  // unit-diameter coordinates keep the slack tolerance scale-free
  std::vector<Vec2> q(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) q[k] = pts[k] / dscale;

  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < q.size(); k += pair_stride) idx.push_back(k);
  if (idx.back() != q.size() - 1) idx.push_back(q.size() - 1);

  std::vector<double> width(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    width[a] = mean_width_exact(tail_hull(q, idx[a]));

  DecrementReport rep;
  rep.min_slack = HUGE_VAL;
  rep.best_c0 = HUGE_VAL;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const double dij = edist(q[idx[a]], q[idx[b]]);
      const double dec = width[a] - width[b];
      const double slack = dec - bundle.c0 * dij;
      ++rep.pairs_checked;
      if (slack < rep.min_slack) {
        rep.min_slack = slack;
        rep.worst_i = idx[a];
        rep.worst_j = idx[b];
      }
      if (slack < -1e-9) ++rep.violations;
      if (dij > 0.0) rep.best_c0 = std::min(rep.best_c0, dec / dij);
    }
  }
  return rep;
}

LengthBoundReport length_bound_report(const std::vector<Vec2>& pts, const NormModel& norm,
                                      const ConstantsBundle& bundle) {
  if (pts.size() < 2) throw std::invalid_argument("length_bound_report: need >= 2 vertices");
  (void)norm;
  LengthBoundReport rep;
  rep.length = length(pts);
  rep.diam = diameter(pts);
  if (!(rep.diam > 0.0)) throw std::invalid_argument("length_bound_report: degenerate curve");
  rep.mean_width = mean_width_exact(convex_hull(pts));
  rep.ratio = rep.length / rep.diam;
  rep.c0 = bundle.c0;
  rep.C = bundle.C;

  double prev = rep.mean_width, sum = 0.0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double cur = mean_width_exact(tail_hull(pts, k));
    sum += prev - cur;
    prev = cur;
  }
  rep.telescoped_sum = sum;
  rep.telescoping_ok = rep.length <= rep.mean_width / bundle.c0 && rep.mean_width <= rep.diam;
  rep.ratio_ok = rep.ratio <= rep.C;
  if (!rep.ratio_ok) throw std::runtime_error("length_bound_report: certified bound violated");
  return rep;
}

}  // namespace scgeo
