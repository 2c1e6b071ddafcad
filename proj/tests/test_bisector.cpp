#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "scgeo/bisector.hpp"
#include "scgeo/norm.hpp"
#include "scgeo/rng.hpp"

using namespace scgeo;

namespace {

NormModel make(const std::string& text) {
  std::string err;
  auto spec = NormSpec::parse(text, err);
  REQUIRE_MESSAGE(spec.has_value(), err);
  return NormModel(*spec);
}

}  // namespace

TEST_SUITE("bisector") {

TEST_CASE("chord endpoints on the lp4 sphere, closed form") {
  const NormModel n = make("lp:4");
  // chord at height 1/2 through the ball |x|^4 + |y|^4 = 1: s^4 = 1 - (1/2)^4
  const ChordSample ch = chord_endpoints(n, {1, 0}, 0.5);
  const double s = std::pow(1.0 - 0.0625, 0.25);
  CHECK(ch.b_t.x == doctest::Approx(s).epsilon(1e-12));
  CHECK(ch.b_t.y == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ch.a_t.x == doctest::Approx(-s).epsilon(1e-12));
  CHECK(std::abs(ch.m_t.x) < 1e-12);
  CHECK(ch.chord_norm == doctest::Approx(2 * s).epsilon(1e-12));
  // b_t - a_t positively parallel to v
  CHECK(dot(ch.b_t - ch.a_t, Vec2{1, 0}) > 0);
}

TEST_CASE("chord offset beyond the support is rejected") {
  const NormModel n = make("lp:4");
  CHECK_THROWS_AS(chord_endpoints(n, {1, 0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(chord_endpoints(n, {1, 0}, -1.5), std::domain_error);
}

TEST_CASE("bisector points are equidistant in the norm") {
  for (const char* text : {"euclid", "lp:3", "lp:4", "alp:2:1,0,0,2"}) {
    const NormModel n = make(text);
    SplitMix64 rng(17);
    for (int k = 0; k < 20; ++k) {
      const Segment seg{{rng.next_double() * 4 - 2, rng.next_double() * 4 - 2},
                        {rng.next_double() * 4 - 2, rng.next_double() * 4 - 2}};
      const double len = n.evaluate(seg.b - seg.a);
      if (len < 0.1) continue;
      const Vec2 vhat = (seg.b - seg.a) / len;
      const double t0 = n.support(normalized(perp(vhat)));
      for (int j = -3; j <= 3; ++j) {
        const Vec2 z = bisector_point(n, seg, t0 * j / 4.0);
        CHECK(std::abs(n.evaluate(seg.a - z) - n.evaluate(seg.b - z)) < 1e-9 * len);
      }
    }
  }
}

TEST_CASE("trace covers the segment midpoint and stays equidistant") {
  const NormModel n = make("lp:4");
  const Segment seg{{0, 0}, {2, 1}};
  const BisectorTrace tr = trace_bisector(n, seg, 201);
  REQUIRE(tr.samples.size() == 201);
  double max_res = 0;
  for (double r : tr.residuals) max_res = std::max(max_res, r);
  CHECK(max_res < 1e-9);
  // middle sample is the chord through the origin: z equals the midpoint
  const Vec2 mid = 0.5 * (seg.a + seg.b);
  CHECK(edist(tr.samples[100], mid) < 1e-12);
  CHECK(edist(tr.asymptote.point, mid) < 1e-12);
  CHECK(tr.kappa_used >= 0);
  CHECK_THROWS_AS(trace_bisector(n, seg, 2), std::invalid_argument);
}

TEST_CASE("oblique projection fixtures") {
  // euclid: the dual line is orthogonal, so the coefficient is the plain dot
  const NormModel e = make("euclid");
  CHECK(oblique_projection(e, {2, 0}, {3, 7}) == doctest::Approx(3).epsilon(1e-12));
  // lp4 along (1,1): Q_v(1,0) = 2^{1/4}/2 by symmetry of the quartic sphere
  const NormModel l4 = make("lp:4");
  CHECK(oblique_projection(l4, {1, 1}, {1, 0}) ==
        doctest::Approx(std::pow(2.0, 0.25) / 2).epsilon(1e-12));
  // decomposition: x = alpha vhat + beta w exactly
  SplitMix64 rng(23);
  for (int k = 0; k < 50; ++k) {
    const Vec2 v{rng.next_double() * 2 - 1, rng.next_double() * 2 - 1};
    const Vec2 x{rng.next_double() * 2 - 1, rng.next_double() * 2 - 1};
    if (enorm(v) < 0.1) continue;
    const double alpha = oblique_projection(l4, v, x);
    const Vec2 vhat = v / l4.evaluate(v);
    const Vec2 w = l4.dual_direction(v).line_direction;
    // remainder after removing alpha vhat must be parallel to w
    const Vec2 rem = x - alpha * vhat;
    CHECK(std::abs(cross(rem, w)) < 1e-9 * (1 + enorm(x)));
  }
}

TEST_CASE("kappa fixtures") {
  const double k_euclid = kappa_estimate(make("euclid"));
  CHECK(k_euclid >= 0);
  CHECK(k_euclid < 1e-8);
  const double k_lp4 = kappa_estimate(make("lp:4"));
  CHECK(k_lp4 == doctest::Approx(0.1966599461439313).epsilon(1e-6));
  const double k_lp3 = kappa_estimate(make("lp:3"));
  CHECK(k_lp3 == doctest::Approx(0.1280164630).epsilon(1e-6));
  CHECK(k_lp3 < k_lp4);  // rounder sphere, thinner strip
  CHECK_THROWS_AS(kappa_estimate(make("lp:4"), 64, 64), std::invalid_argument);
}

TEST_CASE("strip membership") {
  const NormModel n = make("lp:4");
  const Segment seg{{0, 0}, {1, 0}};
  const double kappa = 0.2;
  // points on the dual line through the midpoint have Q = 0
  const Vec2 mid{0.5, 0};
  const Vec2 w = n.dual_direction({1, 0}).line_direction;
  CHECK(strip_contains(n, seg, kappa, mid + 3.0 * w));
  CHECK(strip_contains(n, seg, kappa, mid - 10.0 * w));
  // far along the segment direction, Q grows linearly
  CHECK_FALSE(strip_contains(n, seg, kappa, mid + Vec2{0.5, 0}));
  CHECK(strip_contains(n, seg, kappa, mid + Vec2{0.15, 0}));
}

TEST_CASE("asymptote deviation table and decay") {
  const NormModel n = make("lp:4");
  const Segment seg{{0, 0}, {2, 1}};
  const std::vector<double> rs{10, 30, 100, 300, 1000};
  const auto devs = asymptote_deviation(n, seg, rs);
  REQUIRE(devs.size() == 5);
  const double expect[5] = {7.322923368359932e-03, 2.436418647229331e-03, 7.307699534545354e-04,
                            2.435854216745230e-04, 7.307546851386113e-05};
  for (int k = 0; k < 5; ++k) {
    CHECK(devs[k].first == doctest::Approx(rs[k]));
    CHECK(devs[k].second == doctest::Approx(expect[k]).epsilon(1e-6));
  }
  CHECK_THROWS_AS(asymptote_deviation(n, seg, {0.25}), std::domain_error);
}

}  // TEST_SUITE
