#pragma once

#include <utility>
#include <vector>

#include "scgeo/norm.hpp"
#include "scgeo/vec2.hpp"

namespace scgeo {

struct Segment {
  Vec2 a;
  Vec2 b;
};

// chord of the unit sphere at offset t along the Euclidean normal to v
struct ChordSample {
  double t = 0.0;
  Vec2 a_t, b_t;          // sphere points, b_t - a_t positively parallel to v
  Vec2 m_t;               // chord midpoint
  double chord_norm = 0;  // |b_t - a_t| in the norm
};

struct Line {
  Vec2 point;
  Vec2 dir;  // Euclidean-unit
};

struct BisectorTrace {
  Segment segment;
  std::vector<double> ts;
  std::vector<Vec2> samples;
  std::vector<double> residuals;  // | |a-z| - |b-z| | per sample (norm values)
  Line asymptote;
  double kappa_used = 0.0;
};

// v must be norm-unit; |t| < support(perp of v) or std::domain_error
ChordSample chord_endpoints(const NormModel& norm, Vec2 v, double t);

Vec2 bisector_point(const NormModel& norm, const Segment& seg, double t);

// Samples on a graded grid t = t0*sign(s)*(1 - 2^(-20|s|)), s uniform in [-1,1]:
// uniform coverage near the middle, geometric refinement toward the degenerate
// chords at +-t0 where the asymptotic behaviour lives. kappa < 0 means
// "self-measure": kappa_used is set to the sup of |Q| / |b-a| over the samples.
BisectorTrace trace_bisector(const NormModel& norm, const Segment& seg, int n_samples,
                             double kappa = -1.0);

// coefficient alpha in x = alpha*v^ + beta*w, v^ = v normalized to norm 1,
// w spanning L_v. Well-posed because alpha0 > 0 keeps v and L_v transversal.
double oblique_projection(const NormModel& norm, Vec2 v, Vec2 x);

// sup over directions v and chords t of |Q_v(m_t)| / |b_t - a_t|.
// The two grids drive the coarse scan; the returned value comes from a
// boundary-layer sweep that is essentially grid-independent (see kappa notes
// in the implementation).
double kappa_estimate(const NormModel& norm, int direction_grid = 256, int t_grid = 256);

// |Q_{(b-a)/|b-a|}(x - mid)| <= kappa * |b-a| (norm lengths), evaluated exactly
bool strip_contains(const NormModel& norm, const Segment& seg, double kappa, Vec2 x);

// For each R >= 1/2: locate the chord with |a_t - b_t| = 1/R on the t < 0
// branch and report the Euclidean distance from the bisector point to the
// asymptote line. Segment is normalized internally to |b-a| = 1 in the norm.
std::vector<std::pair<double, double>> asymptote_deviation(const NormModel& norm,
                                                           const Segment& seg,
                                                           const std::vector<double>& rs);

}  // namespace scgeo
