#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "scgeo/vec2.hpp"

namespace scgeo {

enum class NormFamily { Euclid, Lp, AnisotropicLp };

// Spec strings: "euclid" | "lp:P" | "alp:P:a11,a12,a21,a22".
// P >= 2 keeps the norm twice continuously differentiable away from 0,
// which everything downstream (gradients, bisector regularity) relies on.
struct NormSpec {
  NormFamily family = NormFamily::Euclid;
  double p = 2.0;
  std::array<double, 4> a{1.0, 0.0, 0.0, 1.0};  // row-major A for x -> |A x|_p

  static std::optional<NormSpec> parse(std::string_view text, std::string& error);
  std::string to_string() const;
};

struct DualDirection {
  Vec2 x;               // query direction
  Vec2 y;               // tangency point on the unit sphere, <y, perp(x)> > 0
  Vec2 line_direction;  // Euclidean-unit vector spanning L_x
};

class NormModel {
 public:
  explicit NormModel(const NormSpec& spec);

  const NormSpec& spec() const { return spec_; }

  double evaluate(Vec2 x) const;
  // gradient of evaluate at x != 0; 0-homogeneous, odd
  Vec2 gradient(Vec2 x) const;
  // boundary point positively proportional to (cos theta, sin theta)
  Vec2 sphere_point(double theta) const;
  // support function sup{<u,x> : evaluate(x) <= 1} (closed form: dual norm)
  double support(Vec2 u) const;
  // gradient(x)/|gradient(x)|, the Euclidean-unit outer normal at x
  Vec2 outer_normal(Vec2 x) const;
  // the direction L_x: sphere point y where the tangent is parallel to x
  DualDirection dual_direction(Vec2 x) const;
  // minimal angle between L_x and the ray through x, over the sphere
  double alpha0(int grid_resolution = 4096) const;

 private:
  NormSpec spec_;
  std::array<double, 4> ainv_t_{1.0, 0.0, 0.0, 1.0};  // A^{-T}, for support()
  double q_ = 2.0;                                    // dual exponent p/(p-1)
};

}  // namespace scgeo
