#pragma once

#include <cmath>

namespace scgeo {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
constexpr Vec2& operator+=(Vec2& a, Vec2 b) { a = a + b; return a; }
constexpr Vec2& operator-=(Vec2& a, Vec2 b) { a = a - b; return a; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

// counterclockwise quarter turn
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

constexpr double sqnorm(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline double enorm(Vec2 a) { return std::sqrt(sqnorm(a)); }
inline double edist(Vec2 a, Vec2 b) { return enorm(a - b); }
inline Vec2 normalized(Vec2 a) { return a / enorm(a); }

}  // namespace scgeo
