#pragma once

#include <cmath>

namespace tcvortex {

/// A vector in the local l-plane: x1 east, x2 north.
struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;

  friend constexpr Vec2 operator+(Vec2 u, Vec2 v) { return {u.x1 + v.x1, u.x2 + v.x2}; }
  friend constexpr Vec2 operator-(Vec2 u, Vec2 v) { return {u.x1 - v.x1, u.x2 - v.x2}; }
  friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x1, s * v.x2}; }
  friend constexpr Vec2 operator*(Vec2 v, double s) { return {s * v.x1, s * v.x2}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;

  double norm() const { return std::hypot(x1, x2); }
};

/// A timestamped plane position; t in seconds.
struct TimedPoint {
  double t = 0.0;
  Vec2 x;
};

}  // namespace tcvortex
