#pragma once

#include <cstddef>
#include <vector>

#include "scgeo/norm.hpp"
#include "scgeo/vec2.hpp"

namespace scgeo {

// Constant chain certifying the length bound. All entries strictly positive;
// lambda = 1/2 - kappa, tau1 = sin(alpha0), mu = min(1/4, sin(alpha0/2)/4),
// eps0 = min(tau1/6, mu/3, lambda/12), tau = min(mu, lambda/4, eps0/2),
// delta = min(tau, tau1/4), c0 = (lambda tau / 4) asin(delta/2) / pi, C = 1/c0.
struct ConstantsBundle {
  double alpha0 = 0.0;
  double kappa = 0.0;
  double lambda = 0.0;
  double tau1 = 0.0;
  double mu = 0.0;
  double eps0 = 0.0;
  double tau = 0.0;
  double delta = 0.0;
  double c0 = 0.0;
  double C = 0.0;
};

// Arithmetic chain alone, given the two estimated inputs.
ConstantsBundle derive_constants_from(double alpha0, double kappa);

// Runs the alpha0 and kappa estimators for the norm, then the chain.
ConstantsBundle derive_constants(const NormModel& norm);

// Convex hull of the curve tail from index onward.
std::vector<Vec2> tail_hull(const std::vector<Vec2>& pts, std::size_t index);

// Separating-direction certificate for a reversed pair x' = pts[i], x = pts[j]
// (i < j, so x' precedes x). nu is the Euclidean-unit normal to the dual line
// of v0 = (x' - x)/|x' - x| signed toward x'; nu_bar tilts nu by +-eps0 away
// from whichever open half the tail occupies outside the ball B(x0, |x - x'|).
struct PairCertificate {
  std::size_t i = 0, j = 0;
  Vec2 x, xprime, v0, x0, nu, nu_bar;
  double cl20_value = 0.0;  // <nu_bar, v0>, needs >= tau1/2
  double cl21_max = 0.0;    // max over tail y of <xi0(y), nu_bar>, needs <= -delta
  double tail1_max = 0.0;   // max over tail y of <y-x0, nu> / ((lambda/2)|x-x'|), needs <= -1+1e-9
  bool cl20 = false;
  bool cl21 = false;
  bool tail1 = false;
  // both open halves occupied: impossible for self-contracted input, reported loudly
  bool lemma_violation = false;
};

PairCertificate separating_vector(const NormModel& norm, const std::vector<Vec2>& pts,
                                  std::size_t i, std::size_t j, const ConstantsBundle& bundle);

// Mean-width decrement W(hull(tail_j)) + c0 |x_i - x_j| <= W(hull(tail_i)) over
// pairs i < j sampled by stride, in unit-diameter normalized coordinates.
struct DecrementReport {
  double min_slack = 0.0;
  double best_c0 = 0.0;  // largest constant for which every sampled pair holds
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;  // slack < -1e-9
  std::size_t worst_i = 0, worst_j = 0;
};

DecrementReport width_decrement_check(const std::vector<Vec2>& pts, const NormModel& norm,
                                      const ConstantsBundle& bundle, std::size_t pair_stride = 1);

// Length-vs-diameter summary with the telescoped width budget.
struct LengthBoundReport {
  double length = 0.0;
  double diam = 0.0;
  double mean_width = 0.0;     // W(K(curve)), Cauchy formula
  double ratio = 0.0;          // length / diam
  double c0 = 0.0, C = 0.0;
  double telescoped_sum = 0.0;  // sum of consecutive suffix-width decrements
  bool ratio_ok = false;        // ratio <= C
  bool telescoping_ok = false;  // length <= W/c0 and W <= diam
};

LengthBoundReport length_bound_report(const std::vector<Vec2>& pts, const NormModel& norm,
                                      const ConstantsBundle& bundle);

}  // namespace scgeo
