#include "tcvortex/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "tcvortex/errors.hpp"

namespace tcvortex {

namespace {

// 1 - cos(x) without cancellation near zero.
double one_minus_cos(double x) {
  const double s = std::sin(0.5 * x);
  return 2.0 * s * s;
}

void check_frequencies(double l, double b0) {
  if (!(std::abs(l) > kResonanceGuard))
    throw ResonanceError(
        fmt::format("trajectory: |l| = {:.3e} s^-1 is within the degenerate-frequency guard",
                    std::abs(l)));
  if (!(std::abs(b0) > kResonanceGuard))
    throw ResonanceError(
        fmt::format("trajectory: |b0| = {:.3e} s^-1 is within the degenerate-frequency guard",
                    std::abs(b0)));
  if (!(std::abs(b0 - l) > kResonanceGuard))
    throw ResonanceError(fmt::format(
        "trajectory: |b0 - l| = {:.3e} s^-1 is within the resonance guard", std::abs(b0 - l)));
}

double cross(Vec2 u, Vec2 v) { return u.x1 * v.x2 - u.x2 * v.x1; }

int orientation(Vec2 p, Vec2 q, Vec2 r) {
  const double c = cross(q - p, r - p);
  return (c > 0.0) - (c < 0.0);
}

bool on_segment(Vec2 p, Vec2 q, Vec2 r) {
  return std::min(p.x1, r.x1) <= q.x1 && q.x1 <= std::max(p.x1, r.x1) &&
         std::min(p.x2, r.x2) <= q.x2 && q.x2 <= std::max(p.x2, r.x2);
}

bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  return (o1 == 0 && on_segment(p1, q1, p2)) || (o2 == 0 && on_segment(p1, q2, p2)) ||
         (o3 == 0 && on_segment(q1, p1, q2)) || (o4 == 0 && on_segment(q1, p2, q2));
}

CircleComponent circle(double radius, double frequency, double phase) {
  return {radius, frequency, 2.0 * std::numbers::pi / std::abs(frequency), phase};
}

Vec2 circle_offset(const CircleComponent& c, double t) {
  const double angle = c.initial_phase - c.angular_frequency * t;
  return {c.radius * std::cos(angle), c.radius * std::sin(angle)};
}

}  // namespace

TrajectoryCoefficients closed_form_coefficients(Vec2 x0, Vec2 v0, Vec2 mn, double l, double b0) {
  check_frequencies(l, b0);
  const double m = mn.x1;
  const double n = mn.x2;
  TrajectoryCoefficients c;
  c.l = l;
  c.b0 = b0;
  c.origin = x0;
  c.v0 = v0;
  c.mn = mn;
  c.center = {x0.x1 + v0.x2 / l + m / (b0 * l), x0.x2 - v0.x1 / l + n / (b0 * l)};
  c.P = v0.x1 / l - n / (l * (b0 - l));
  c.Q = v0.x2 / l + m / (l * (b0 - l));
  c.S = n / (b0 * (b0 - l));
  c.T = m / (b0 * (b0 - l));
  return c;
}

Vec2 eval_trajectory(const TrajectoryCoefficients& c, double t) {
  // Center offsets telescope: X1c - x1(0) = Q - T and X2c - x2(0) = -(P + S).
  const double lt = c.l * t;
  const double bt = c.b0 * t;
  const double sl = std::sin(lt);
  const double sb = std::sin(bt);
  const double cl = one_minus_cos(lt);
  const double cb = one_minus_cos(bt);
  return {c.origin.x1 + c.P * sl + c.Q * cl + c.S * sb - c.T * cb,
          c.origin.x2 + c.Q * sl - c.P * cl - c.T * sb - c.S * cb};
}

Vec2 eval_velocity(const TrajectoryCoefficients& c, double t) {
  const double lt = c.l * t;
  const double bt = c.b0 * t;
  const double l = c.l;
  const double b = c.b0;
  return {c.P * l * std::cos(lt) + c.Q * l * std::sin(lt) + c.S * b * std::cos(bt) -
              c.T * b * std::sin(bt),
          c.Q * l * std::cos(lt) - c.P * l * std::sin(lt) - c.T * b * std::cos(bt) -
              c.S * b * std::sin(bt)};
}

TrajectoryDecomposition decompose(const TrajectoryCoefficients& c) {
  TrajectoryDecomposition d;
  d.center = c.center;
  d.inertial = circle(std::hypot(c.P, c.Q), c.l, std::atan2(c.P, -c.Q));
  d.vortex = circle(std::hypot(c.S, c.T), c.b0, std::atan2(c.S, c.T));
  return d;
}

Vec2 resynthesize(const TrajectoryDecomposition& d, double t) {
  return d.center + circle_offset(d.inertial, t) + circle_offset(d.vortex, t);
}

std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(
    std::span<const Vec2> path) {
  if (path.size() < 4) return std::nullopt;
  const std::size_t segments = path.size() - 1;
  for (std::size_t j = 2; j < segments; ++j) {
    for (std::size_t i = 0; i + 1 < j; ++i) {
      if (segments_intersect(path[i], path[i + 1], path[j], path[j + 1]))
        return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace tcvortex
