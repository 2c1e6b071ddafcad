#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
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

Vec2 fd_gradient(const NormModel& n, Vec2 x) {
  const double h = 1e-6;
  return {(n.evaluate({x.x + h, x.y}) - n.evaluate({x.x - h, x.y})) / (2 * h),
          (n.evaluate({x.x, x.y + h}) - n.evaluate({x.x, x.y - h})) / (2 * h)};
}

}  // namespace

TEST_SUITE("norm") {

TEST_CASE("spec parsing round-trips") {
  for (const char* text : {"euclid", "lp:4", "lp:2.5", "alp:2:1,0,0,3", "alp:3:2,1,0,1"}) {
    std::string err;
    auto spec = NormSpec::parse(text, err);
    REQUIRE_MESSAGE(spec.has_value(), err);
    auto again = NormSpec::parse(spec->to_string(), err);
    REQUIRE_MESSAGE(again.has_value(), err);
    CHECK(again->family == spec->family);
    CHECK(again->p == spec->p);
    CHECK(again->a == spec->a);
  }
}

TEST_CASE("spec parsing rejects bad input") {
  std::string err;
  CHECK_FALSE(NormSpec::parse("lp:1.5", err).has_value());
  CHECK(err == "p must be >= 2");
  CHECK_FALSE(NormSpec::parse("lp:abc", err).has_value());
  CHECK_FALSE(NormSpec::parse("", err).has_value());
  CHECK_FALSE(NormSpec::parse("mystery", err).has_value());
  CHECK_FALSE(NormSpec::parse("alp:2:1,0,0", err).has_value());
  CHECK_FALSE(NormSpec::parse("alp:1.9:1,0,0,1", err).has_value());
  CHECK_FALSE(NormSpec::parse("alp:2:1,2,2,4", err).has_value());  // singular A
}

TEST_CASE("closed-form values") {
  CHECK(make("euclid").evaluate({3, 4}) == doctest::Approx(5).epsilon(1e-15));
  CHECK(make("lp:4").evaluate({1, 1}) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-15));
  CHECK(make("lp:3").evaluate({-2, 0}) == doctest::Approx(2).epsilon(1e-15));
  CHECK(make("alp:2:1,0,0,3").evaluate({1, 1}) == doctest::Approx(std::sqrt(10)).epsilon(1e-15));
}

TEST_CASE("norm axioms on random vectors") {
  for (const char* text : {"lp:3", "alp:2.5:1,1,0,2"}) {
    const NormModel n = make(text);
    SplitMix64 rng(7);
    for (int k = 0; k < 200; ++k) {
      const Vec2 u{rng.next_double() * 4 - 2, rng.next_double() * 4 - 2};
      const Vec2 v{rng.next_double() * 4 - 2, rng.next_double() * 4 - 2};
      CHECK(n.evaluate(u + v) <= n.evaluate(u) + n.evaluate(v) + 1e-12);
      CHECK(n.evaluate(2.5 * u) == doctest::Approx(2.5 * n.evaluate(u)).epsilon(1e-13));
      CHECK(n.evaluate(-u) == doctest::Approx(n.evaluate(u)).epsilon(1e-15));
    }
  }
}

TEST_CASE("gradient matches finite differences and Euler identity") {
  for (const char* text : {"euclid", "lp:3", "lp:4", "alp:2:1,0,0,3", "alp:4:2,1,-1,2"}) {
    const NormModel n = make(text);
    SplitMix64 rng(11);
    for (int k = 0; k < 100; ++k) {
      const double a = rng.next_double() * 6.283185307179586;
      const double r = 0.3 + 3 * rng.next_double();
      const Vec2 x{r * std::cos(a), r * std::sin(a)};
      const Vec2 g = n.gradient(x);
      const Vec2 fd = fd_gradient(n, x);
      CHECK(std::abs(g.x - fd.x) < 1e-6);
      CHECK(std::abs(g.y - fd.y) < 1e-6);
      // 1-homogeneity: <grad(x), x> = |x|
      CHECK(dot(g, x) == doctest::Approx(n.evaluate(x)).epsilon(1e-12));
      // 0-homogeneity of the gradient itself
      const Vec2 g2 = n.gradient(3.7 * x);
      CHECK(g2.x == doctest::Approx(g.x).epsilon(1e-12));
      CHECK(g2.y == doctest::Approx(g.y).epsilon(1e-12));
    }
  }
}

TEST_CASE("sphere_point lies on the sphere in the right direction") {
  for (const char* text : {"lp:4", "alp:2:1,0,0,2"}) {
    const NormModel n = make(text);
    for (int k = 0; k < 64; ++k) {
      const double th = 6.283185307179586 * k / 64;
      const Vec2 s = n.sphere_point(th);
      CHECK(n.evaluate(s) == doctest::Approx(1).epsilon(1e-13));
      CHECK(cross(Vec2{std::cos(th), std::sin(th)}, s) == doctest::Approx(0).epsilon(1e-13));
      CHECK(dot(Vec2{std::cos(th), std::sin(th)}, s) > 0);
    }
  }
}

TEST_CASE("support function closed forms and brute force") {
  const NormModel l4 = make("lp:4");
  CHECK(l4.support({1, 0}) == doctest::Approx(1).epsilon(1e-15));
  // dual exponent 4/3: sup over the lp4 ball of <(1,1), x> is 2^{3/4}
  CHECK(l4.support({1, 1}) == doctest::Approx(std::pow(2.0, 0.75)).epsilon(1e-13));
  const NormModel e = make("euclid");
  CHECK(e.support({3, 4}) == doctest::Approx(5).epsilon(1e-15));

  const NormModel an = make("alp:3:2,1,-1,2");
  SplitMix64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const Vec2 u{rng.next_double() * 2 - 1, rng.next_double() * 2 - 1};
    double brute = 0;
    for (int j = 0; j < 20000; ++j)
      brute = std::max(brute, dot(u, an.sphere_point(6.283185307179586 * j / 20000)));
    CHECK(an.support(u) == doctest::Approx(brute).epsilon(1e-7));
    CHECK(an.support(u) >= brute - 1e-12);  // support is the sup, never below a sample
  }
}

TEST_CASE("dual_direction is the tangency point") {
  for (const char* text : {"euclid", "lp:3", "lp:4", "alp:2:1,0,0,3"}) {
    const NormModel n = make(text);
    SplitMix64 rng(5);
    for (int k = 0; k < 50; ++k) {
      const double a = rng.next_double() * 6.283185307179586;
      const Vec2 x{std::cos(a), std::sin(a)};
      const DualDirection d = n.dual_direction(x);
      CHECK(n.evaluate(d.y) == doctest::Approx(1).epsilon(1e-12));
      // tangent at y is parallel to x: the outer normal there is orthogonal to x
      CHECK(std::abs(dot(n.outer_normal(d.y), x)) < 1e-9);
      CHECK(dot(d.y, perp(x)) > 0);
      // L_x is the radial line through y; its stored direction is unit length
      CHECK(enorm(d.line_direction) == doctest::Approx(1).epsilon(1e-15));
      CHECK(std::abs(cross(d.line_direction, d.y)) < 1e-9);
      CHECK(dot(d.line_direction, d.y) > 0);
    }
  }
}

TEST_CASE("euclid dual direction is orthogonal") {
  const NormModel e = make("euclid");
  const DualDirection d = e.dual_direction({1, 0});
  CHECK(d.y.x == doctest::Approx(0).epsilon(1e-9));
  CHECK(d.y.y == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("alpha0 fixtures") {
  // euclid: radial and tangential directions are orthogonal everywhere
  CHECK(make("euclid").alpha0() == doctest::Approx(1.5707963267948966).epsilon(1e-9));
  // lp:4 extremal angle satisfies cos(alpha0) = 1/3
  CHECK(make("lp:4").alpha0() == doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-9));
  CHECK(make("lp:4").alpha0() == doctest::Approx(1.230959417340775).epsilon(1e-9));
  CHECK(make("lp:3").alpha0() == doctest::Approx(1.347499812460558).epsilon(1e-9));
  // ellipse with semi-axes (1, 1/b): alpha0 = asin(2b / (1 + b^2))
  CHECK(make("alp:2:1,0,0,3").alpha0() == doctest::Approx(std::asin(0.6)).epsilon(1e-9));
  CHECK(make("alp:2:1,0,0,2").alpha0() == doctest::Approx(std::asin(0.8)).epsilon(1e-9));
}

TEST_CASE("alpha0 rejects tiny grids") {
  CHECK_THROWS_AS(make("lp:4").alpha0(32), std::invalid_argument);
}

}  // TEST_SUITE
