#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tcvortex/geo.hpp"
#include "tcvortex/plane.hpp"
#include "tcvortex/track.hpp"

namespace tcvortex {

/// Search settings for the three-point vorticity fit.
///
/// `bound` limits |b0| during the scan. The default 1e-4 s^-1 admits the
/// fitted values of real tracks; kStrictBound is the narrower physical bound.
struct FitConfig {
  double bound = 1e-4;
  double epsilon = 2e-6;
  int grid_points = 4001;

  void validate() const;
};

inline constexpr double kStrictBound = 1e-5;

/// Unknowns of the closed-form trajectory recovered from a window.
struct LinearFit {
  Vec2 v0;  // m s^-1
  Vec2 mn;  // c0 (M(0), N(0)), m s^-2
  double condition_number = 0.0;
};

/// Windows whose 4x4 system is worse conditioned than this are rejected.
inline constexpr double kMaxConditionNumber = 1e12;

/// Solves for (V(0), c0 M(0), c0 N(0)) such that the closed-form trajectory
/// started at p0 with vorticity b0 passes through p1 and p2. The system is
/// assembled in hours and kilometres. Throws DegenerateWindow for
/// non-increasing times or a condition number above kMaxConditionNumber,
/// ResonanceError when (l, b0) violate the trajectory guards.
LinearFit solve_linear_fit(const TimedPoint& p0, const TimedPoint& p1, const TimedPoint& p2,
                           double b0, double l);

/// (p1 - p0) / (t1 - t0). Throws DomainError unless t1 > t0.
Vec2 finite_difference_velocity(const TimedPoint& p0, const TimedPoint& p1);

struct FitResult {
  /// Fitted at the mean of the closest (b01, b02) pair, or at the fixed b0.
  std::optional<Vec2> v0;
  std::optional<Vec2> mn;
  /// Set only when accepted.
  std::optional<double> b0;
  /// Closest roots of V1(b0) = V1bar and V2(b0) = V2bar.
  std::optional<double> b01;
  std::optional<double> b02;
  bool accepted = false;
  /// True for fits made with a caller-supplied b0 (no root search).
  bool fixed_b0 = false;
  double epsilon_used = 0.0;
  double bound_used = 0.0;
  double l = 0.0;
  double condition_number = 0.0;
  std::size_t window_start = 0;
  /// Plane coordinates of the anchors; times on the track's axis.
  std::array<TimedPoint, 3> window{};
  /// Tangent-plane origin of `window` for geographic fits.
  std::optional<GeoPoint> origin;
};

/// Scans b0 over [-bound, bound] (minus guard neighbourhoods of 0 and l),
/// brackets sign changes of g_i(b0) = V_i(b0) - Vbar_i, refines them by
/// bisection, pairs the two conditions by minimal |b01 - b02| and accepts
/// the pair when |b01 - b02| < epsilon. A missing root is a rejection.
/// Throws DomainError when every grid point is guard-excluded.
FitResult find_b0(const TimedPoint& p0, const TimedPoint& p1, const TimedPoint& p2, double l,
                  const FitConfig& config = {});

/// Historical-fitting mode: linear fit at a caller-chosen b0, marked accepted.
FitResult fit_fixed_b0(const TimedPoint& p0, const TimedPoint& p1, const TimedPoint& p2, double l,
                       double b0);

/// Root of b^2 - l b - 2 c0 A0 = 0 nearest zero. Throws DomainError if l == 0.
double b0_equilibrium_estimate(double c0, double A0, double l);

/// Leading-order form -2 c0 A0 / l of the root above, valid for c0 A0 << l^2.
double b0_asymptotic_estimate(double c0, double A0, double l);

/// find_b0 on every window of three consecutive plane points (stride 1) with a
/// fixed Coriolis parameter.
std::vector<FitResult> sweep_points(std::span<const TimedPoint> points, double l,
                                    const FitConfig& config = {});

/// find_b0 on every three-point window of a geographic track. Each window is
/// projected on the tangent plane of its first point, where l is evaluated.
/// Throws DomainError if the track has fewer than three points.
std::vector<FitResult> sweep_track(const Track& track, const FitConfig& config = {});

/// Geographic fit of the window starting at `start`; `fixed_b0` switches to
/// the historical-fitting mode.
FitResult fit_track_window(const Track& track, std::size_t start, const FitConfig& config,
                           std::optional<double> fixed_b0 = std::nullopt);

/// Closed-form positions from the window's first anchor for t in
/// [0, horizon] at `step` (the endpoint is always included). Times are on
/// the track's axis. Throws PreconditionError unless fit.accepted.
std::vector<TimedPoint> forecast(const FitResult& fit, double l, double horizon, double step);

/// forecast() mapped back to geographic coordinates through fit.origin and
/// fit.l. Throws PreconditionError if the fit has no origin.
Track forecast_track(const FitResult& fit, double horizon, double step);

}  // namespace tcvortex
