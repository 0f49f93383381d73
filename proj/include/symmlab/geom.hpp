#pragma once

#include <cmath>

#include "symmlab/common.hpp"

namespace symmlab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
  bool operator==(const Vec2&) const = default;
};

inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }

inline Vec2 unit(Vec2 a) {
  const double n = norm(a);
  SYMMLAB_REQUIRE(n > 0.0, "cannot normalize zero vector");
  return {a.x / n, a.y / n};
}

inline Vec2 from_polar(double r, double theta) {
  return {r * std::cos(theta), r * std::sin(theta)};
}

/// Counterclockwise rotation by gamma.
inline Vec2 rotate(Vec2 v, double gamma) {
  const double c = std::cos(gamma), s = std::sin(gamma);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Reflection across the line {x2 = 0}.
inline Vec2 reflect_x2(Vec2 v) { return {v.x, -v.y}; }

/// Left normal of a direction vector (interior side of a CCW ring edge).
inline Vec2 left_normal(Vec2 u) { return {-u.y, u.x}; }

}  // namespace symmlab
