#include "scgeo/norm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace scgeo {
namespace {

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size() && std::isfinite(out);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Vec2 apply(const std::array<double, 4>& m, Vec2 v) {
  return {m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y};
}

double lp_value(double p, Vec2 u) {
  return std::pow(std::pow(std::abs(u.x), p) + std::pow(std::abs(u.y), p), 1.0 / p);
}

// gradient of |.|_p at u != 0: sign(u_i)|u_i/v|^(p-1), 0-homogeneous
Vec2 lp_gradient(double p, Vec2 u) {
  const double v = lp_value(p, u);
  auto g = [&](double c) {
    double t = std::pow(std::abs(c) / v, p - 1.0);
    return std::signbit(c) ? -t : (c == 0.0 ? 0.0 : t);
  };
  return {g(u.x), g(u.y)};
}

}  // namespace

std::optional<NormSpec> NormSpec::parse(std::string_view text, std::string& error) {
  error.clear();
  if (text == "euclid") return NormSpec{};

  auto split = [](std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
      auto pos = s.find(sep);
      if (pos == std::string_view::npos) {
        parts.push_back(s);
        return parts;
      }
      parts.push_back(s.substr(0, pos));
      s.remove_prefix(pos + 1);
    }
  };

  const auto parts = split(text, ':');
  if (parts[0] == "lp" && parts.size() == 2) {
    NormSpec spec;
    spec.family = NormFamily::Lp;
    if (!parse_double(parts[1], spec.p)) {
      error = "invalid norm spec '" + std::string(text) + "': cannot parse p";
      return std::nullopt;
    }
    if (!(spec.p >= 2.0)) {
      error = "p must be >= 2";
      return std::nullopt;
    }
    return spec;
  }
  if (parts[0] == "alp" && parts.size() == 3) {
    NormSpec spec;
    spec.family = NormFamily::AnisotropicLp;
    if (!parse_double(parts[1], spec.p)) {
      error = "invalid norm spec '" + std::string(text) + "': cannot parse p";
      return std::nullopt;
    }
    if (!(spec.p >= 2.0)) {
      error = "p must be >= 2";
      return std::nullopt;
    }
    const auto entries = split(parts[2], ',');
    if (entries.size() != 4) {
      error = "invalid norm spec '" + std::string(text) + "': matrix needs a11,a12,a21,a22";
      return std::nullopt;
    }
    for (int i = 0; i < 4; ++i) {
      if (!parse_double(entries[i], spec.a[i])) {
        error = "invalid norm spec '" + std::string(text) + "': cannot parse matrix entry";
        return std::nullopt;
      }
    }
    const double det = spec.a[0] * spec.a[3] - spec.a[1] * spec.a[2];
    if (std::abs(det) < 1e-14) {
      error = "matrix A must be invertible";
      return std::nullopt;
    }
    return spec;
  }
  error = "invalid norm spec '" + std::string(text) +
          "': expected euclid | lp:P | alp:P:a11,a12,a21,a22";
  return std::nullopt;
}

std::string NormSpec::to_string() const {
  switch (family) {
    case NormFamily::Euclid:
      return "euclid";
    case NormFamily::Lp:
      return "lp:" + format_double(p);
    case NormFamily::AnisotropicLp:
      return "alp:" + format_double(p) + ":" + format_double(a[0]) + "," +
             format_double(a[1]) + "," + format_double(a[2]) + "," + format_double(a[3]);
  }
  return "euclid";
}

NormModel::NormModel(const NormSpec& spec) : spec_(spec) {
  if (spec_.family != NormFamily::Euclid && !(spec_.p >= 2.0))
    throw std::invalid_argument("NormModel: p must be >= 2");
  q_ = spec_.p / (spec_.p - 1.0);
  if (spec_.family == NormFamily::AnisotropicLp) {
    const auto& a = spec_.a;
    const double det = a[0] * a[3] - a[1] * a[2];
    if (std::abs(det) < 1e-14) throw std::invalid_argument("NormModel: A is singular");
    // A^{-1} = (1/det)[a33 -a12; -a21 a11]; transpose of that
    ainv_t_ = {a[3] / det, -a[2] / det, -a[1] / det, a[0] / det};
  }
}

double NormModel::evaluate(Vec2 x) const {
  switch (spec_.family) {
    case NormFamily::Euclid:
      return enorm(x);
    case NormFamily::Lp:
      return lp_value(spec_.p, x);
    case NormFamily::AnisotropicLp:
      return lp_value(spec_.p, apply(spec_.a, x));
  }
  return 0.0;
}

Vec2 NormModel::gradient(Vec2 x) const {
  if (x.x == 0.0 && x.y == 0.0)
    throw std::invalid_argument("gradient: undefined at the origin");
  switch (spec_.family) {
    case NormFamily::Euclid:
      return normalized(x);
    case NormFamily::Lp:
      return lp_gradient(spec_.p, x);
    case NormFamily::AnisotropicLp: {
      // chain rule: grad |Ax|_p = A^T g(Ax)
      Vec2 g = lp_gradient(spec_.p, apply(spec_.a, x));
      const auto& a = spec_.a;
      return {a[0] * g.x + a[2] * g.y, a[1] * g.x + a[3] * g.y};
    }
  }
  return {};
}

Vec2 NormModel::sphere_point(double theta) const {
  const Vec2 u{std::cos(theta), std::sin(theta)};
  return u / evaluate(u);
}

double NormModel::support(Vec2 u) const {
  switch (spec_.family) {
    case NormFamily::Euclid:
      return enorm(u);
    case NormFamily::Lp:
      return lp_value(q_, u);
    case NormFamily::AnisotropicLp:
      return lp_value(q_, apply(ainv_t_, u));
  }
  return 0.0;
}

Vec2 NormModel::outer_normal(Vec2 x) const { return normalized(gradient(x)); }

DualDirection NormModel::dual_direction(Vec2 x) const {
  if (x.x == 0.0 && x.y == 0.0)
    throw std::invalid_argument("dual_direction: zero input");
  // f(theta) = <grad(cos,sin), x> flips sign across a half period:
  // f(phi) = |x| <g(x^), x^> = |x| ||x^|| > 0 and f(phi+pi) = -f(phi).
  const double phi = std::atan2(x.y, x.x);
  auto f = [&](double th) { return dot(gradient({std::cos(th), std::sin(th)}), x); };
  double lo = phi, hi = phi + M_PI;
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double theta = 0.5 * (lo + hi);
  DualDirection d;
  d.x = x;
  d.y = sphere_point(theta);
  d.line_direction = Vec2{std::cos(theta), std::sin(theta)};
  return d;
}

double NormModel::alpha0(int grid_resolution) const {
  if (grid_resolution < 64)
    throw std::invalid_argument("alpha0: grid resolution must be >= 64");
  // alpha0 = pi/2 - max angle(normal, radial direction). The angle is computed
  // as atan2(|cross|, dot), which stays accurate where the naive
  // arcsin(min dot) formulation would lose half the significant digits near 1.
  auto angle = [&](double th) {
    const Vec2 u{std::cos(th), std::sin(th)};
    const Vec2 g = gradient(u);
    return std::atan2(std::abs(cross(g, u)), dot(g, u));
  };
  const int n = grid_resolution;
  double best = -1.0, best_th = 0.0;
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * M_PI * i / n;
    const double a = angle(th);
    if (a > best) {
      best = a;
      best_th = th;
    }
  }
  // golden-section refinement of the max in the bracketing grid cell
  const double h = 2.0 * M_PI / n;
  double lo = best_th - h, hi = best_th + h;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = angle(c), fd = angle(d);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = angle(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = angle(d);
    }
  }
  best = std::max(best, std::max(fc, fd));
  const double a0 = M_PI / 2.0 - best;
  if (!(a0 > 0.0))
    throw std::runtime_error("alpha0: nonpositive result, model is not strictly convex");
  return a0;
}

}  // namespace scgeo
