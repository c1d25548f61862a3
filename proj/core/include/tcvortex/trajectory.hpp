#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "tcvortex/plane.hpp"

namespace tcvortex {

/// Frequencies closer than this to zero, or to each other, are rejected.
inline constexpr double kResonanceGuard = 1e-9;

/// Closed-form eye trajectory at the vortex equilibrium:
///
///   x1(t) = X1c + P sin(l t) - Q cos(l t) + S sin(b0 t) + T cos(b0 t)
///   x2(t) = X2c + Q sin(l t) + P cos(l t) - T sin(b0 t) + S cos(b0 t)
///
/// with (m, n) the initial pressure-gradient forcing c0 (M(0), N(0)).
struct TrajectoryCoefficients {
  Vec2 center;
  double P = 0.0;
  double Q = 0.0;
  double S = 0.0;
  double T = 0.0;
  double l = 0.0;
  double b0 = 0.0;
  Vec2 origin;
  Vec2 v0;
  Vec2 mn;
};

/// Throws ResonanceError when |l|, |b0| or |b0 - l| is within kResonanceGuard.
TrajectoryCoefficients closed_form_coefficients(Vec2 x0, Vec2 v0, Vec2 mn, double l, double b0);

/// Position at time t (seconds after the origin time). Evaluated relative to
/// the origin so that t = 0 returns the origin exactly.
Vec2 eval_trajectory(const TrajectoryCoefficients& c, double t);

/// Eye velocity at time t.
Vec2 eval_velocity(const TrajectoryCoefficients& c, double t);

/// One uniformly rotating component: offset(t) = radius (cos(phase - w t),
/// sin(phase - w t)) with w = angular_frequency (positive w turns clockwise).
struct CircleComponent {
  double radius = 0.0;
  double angular_frequency = 0.0;
  double period = 0.0;
  double initial_phase = 0.0;
};

struct TrajectoryDecomposition {
  Vec2 center;
  CircleComponent inertial;  // frequency l
  CircleComponent vortex;    // frequency b0
};

TrajectoryDecomposition decompose(const TrajectoryCoefficients& c);

/// Rebuilds the position at time t from the two circles.
Vec2 resynthesize(const TrajectoryDecomposition& d, double t);

/// First pair (i, j), i + 1 < j, of polyline segments [p_i, p_i+1] and
/// [p_j, p_j+1] that intersect, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(
    std::span<const Vec2> path);

}  // namespace tcvortex
