#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "scgeo/norm.hpp"
#include "scgeo/vec2.hpp"

namespace scgeo {

// Discrete curve: vertex sequence with strictly increasing parameters.
struct TimedPolyline {
  std::vector<double> params;
  std::vector<Vec2> vertices;
};

struct SelfContractedReport {
  bool is_sc = true;
  // worst triple (i, j, k), i <= j <= k, maximizing ||g_j - g_k|| - ||g_i - g_k||
  std::size_t i = 0, j = 0, k = 0;
  double defect = 0.0;  // positive means the monotonicity is violated by that much
  std::size_t checked_triples = 0;
};

// Check that i -> ||g_i - g_k|| is non-increasing for every k: O(n^2) over
// consecutive pairs, which bounds all triples by telescoping. The tolerance is
// absolute on norm values; scale the curve to unit diameter for a scale-free
// verdict.
SelfContractedReport is_self_contracted(const NormModel& norm, const std::vector<Vec2>& pts,
                                        double tol = 1e-12);

// Euclidean polyline length.
double length(const std::vector<Vec2>& pts);

// Minimum over triples i < j < k of the Euclidean cosine of the angle at g_i
// subtended by g_j and g_k. For a self-contracted curve this is >= -cos(alpha0)
// (up to 1e-9); a violation throws. Precondition: pts is SC under norm.
double triple_cosine_check(const NormModel& norm, const std::vector<Vec2>& pts, double alpha0);

struct GreedyResult {
  TimedPolyline curve;
  bool truncated = false;  // stalled before reaching n vertices
  int halvings = 0;
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
};

// Random self-contracted curve: from (0,0), propose steps of the current
// length in uniformly random directions, accept when every distance constraint
// to the new point is satisfied, halve the step after 200 consecutive
// rejections, stall below 1e-12 of the initial step. Deterministic per seed.
GreedyResult generate_greedy(const NormModel& norm, int n, double step, std::uint64_t seed);

// Convex quadratic potential f(z) = (qxx z_x^2 + 2 qxy z_x z_y + qyy z_y^2)/2.
struct QuadraticPotential {
  double qxx = 1.0, qxy = 0.0, qyy = 1.0;
};

// Explicit-Euler gradient descent polyline z <- z - h grad f(z), params k*h.
// Requires positive definite f and h under the stability bound 2/lambda_max.
// The Euclidean self-contraction of the discrete sequence is a property to
// validate with is_self_contracted, never assumed.
TimedPolyline generate_gradient_descent(const QuadraticPotential& f, Vec2 x0, double h, int n);

}  // namespace scgeo
