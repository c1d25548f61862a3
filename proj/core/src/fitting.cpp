#include "tcvortex/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "tcvortex/errors.hpp"
#include "tcvortex/model.hpp"
#include "tcvortex/roots.hpp"
#include "tcvortex/trajectory.hpp"

namespace tcvortex {

namespace {

// Units of the internal 4x4 system.
constexpr double kTimeUnit = 3600.0;
constexpr double kLengthUnit = 1000.0;

double one_minus_cos(double x) {
  const double s = std::sin(0.5 * x);
  return 2.0 * s * s;
}

bool guarded(double b0, double l) {
  return std::abs(b0) <= kResonanceGuard || std::abs(b0 - l) <= kResonanceGuard;
}

// Rows of the displacement x(t) - x(0) as a linear map of (V1, V2, m, n),
// everything in scaled units.
void fill_rows(Eigen::Matrix4d& a, int row, double t, double b0, double l) {
  const double sl = std::sin(l * t);
  const double sb = std::sin(b0 * t);
  const double cl = one_minus_cos(l * t);
  const double cb = one_minus_cos(b0 * t);
  const double denom = b0 * l * (b0 - l);
  const double even = (b0 * cl - l * cb) / denom;
  const double odd = (-b0 * sl + l * sb) / denom;
  a.row(row) << sl / l, cl / l, even, odd;
  a.row(row + 1) << -cl / l, sl / l, -odd, even;
}

struct ScanPoint {
  double b0 = 0.0;
  bool valid = false;
  double g1 = 0.0;
  double g2 = 0.0;
};

}  // namespace

void FitConfig::validate() const {
  if (!(bound > 0.0) || !std::isfinite(bound)) throw DomainError("FitConfig: bound must be positive");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw DomainError("FitConfig: epsilon must be positive");
  if (grid_points < 2) throw DomainError("FitConfig: grid_points must be at least 2");
}

LinearFit solve_linear_fit(const TimedPoint& p0, const TimedPoint& p1, const TimedPoint& p2,
                           double b0, double l) {
  if (!(p1.t > p0.t && p2.t > p1.t))
    throw DegenerateWindow("solve_linear_fit: window times must increase strictly");
  if (!(std::abs(l) > kResonanceGuard) || !(std::abs(b0) > kResonanceGuard) ||
      !(std::abs(b0 - l) > kResonanceGuard))
    throw ResonanceError(fmt::format(
        "solve_linear_fit: frequencies violate guards (|l| = {:g}, |b0| = {:g}, |b0 - l| = {:g})",
        std::abs(l), std::abs(b0), std::abs(b0 - l)));

  const double ls = l * kTimeUnit;
  const double bs = b0 * kTimeUnit;
  Eigen::Matrix4d a;
  fill_rows(a, 0, (p1.t - p0.t) / kTimeUnit, bs, ls);
  fill_rows(a, 2, (p2.t - p0.t) / kTimeUnit, bs, ls);
  Eigen::Vector4d rhs;
  rhs << (p1.x.x1 - p0.x.x1) / kLengthUnit, (p1.x.x2 - p0.x.x2) / kLengthUnit,
      (p2.x.x1 - p0.x.x1) / kLengthUnit, (p2.x.x2 - p0.x.x2) / kLengthUnit;

  const Eigen::JacobiSVD<Eigen::Matrix4d> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cond = sigma(3) > 0.0 ? sigma(0) / sigma(3) : std::numeric_limits<double>::infinity();
  if (!(cond <= kMaxConditionNumber))
    throw DegenerateWindow(fmt::format("solve_linear_fit: condition number {:g} too large", cond));
  const Eigen::Vector4d u = svd.solve(rhs);

  LinearFit fit;
  fit.v0 = {u(0) * kLengthUnit / kTimeUnit, u(1) * kLengthUnit / kTimeUnit};
  const double accel = kLengthUnit / (kTimeUnit * kTimeUnit);
  fit.mn = {u(2) * accel, u(3) * accel};
  fit.condition_number = cond;
  return fit;
}

Vec2 finite_difference_velocity(const TimedPoint& p0, const TimedPoint& p1) {
  if (!(p1.t > p0.t)) throw DomainError("finite_difference_velocity: t1 must exceed t0");
  return (1.0 / (p1.t - p0.t)) * (p1.x - p0.x);
}

FitResult find_b0(const TimedPoint& p0, const TimedPoint& p1, const TimedPoint& p2, double l,
                  const FitConfig& config) {
  config.validate();
  if (!(p1.t > p0.t && p2.t > p1.t))
    throw DegenerateWindow("find_b0: window times must increase strictly");

  FitResult result;
  result.epsilon_used = config.epsilon;
  result.bound_used = config.bound;
  result.l = l;
  result.window = {p0, p1, p2};

  const Vec2 vbar = finite_difference_velocity(p0, p1);
  const auto g = [&](double b0, int component) {
    const LinearFit fit = solve_linear_fit(p0, p1, p2, b0, l);
    return component == 0 ? fit.v0.x1 - vbar.x1 : fit.v0.x2 - vbar.x2;
  };

  std::vector<ScanPoint> grid(static_cast<std::size_t>(config.grid_points));
  const double span = 2.0 * config.bound;
  bool any_unguarded = false;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ScanPoint& sp = grid[i];
    sp.b0 = -config.bound + span * static_cast<double>(i) / static_cast<double>(grid.size() - 1);
    if (guarded(sp.b0, l)) continue;
    any_unguarded = true;
    try {
      const LinearFit fit = solve_linear_fit(p0, p1, p2, sp.b0, l);
      sp.g1 = fit.v0.x1 - vbar.x1;
      sp.g2 = fit.v0.x2 - vbar.x2;
      sp.valid = std::isfinite(sp.g1) && std::isfinite(sp.g2);
    } catch (const Error&) {
      sp.valid = false;
    }
  }
  if (!any_unguarded) throw DomainError("find_b0: every candidate b0 lies inside a guard band");

  const auto straddles_guard = [&](double lo, double hi) {
    for (double c : {0.0, l})
      if (lo - kResonanceGuard <= c && c <= hi + kResonanceGuard) return true;
    return false;
  };

  const auto roots_of = [&](int component) {
    std::vector<double> roots;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const ScanPoint& a = grid[i];
      if (!a.valid) continue;
      const double ga = component == 0 ? a.g1 : a.g2;
      if (ga == 0.0) {
        roots.push_back(a.b0);
        continue;
      }
      if (i + 1 == grid.size()) break;
      const ScanPoint& b = grid[i + 1];
      if (!b.valid || straddles_guard(a.b0, b.b0)) continue;
      const double gb = component == 0 ? b.g1 : b.g2;
      if (gb == 0.0 || std::signbit(ga) == std::signbit(gb)) continue;
      try {
        const auto f = [&](double b0) { return g(b0, component); };
        const double root = bisect(f, a.b0, b.b0, 0.0, 200);
        // A sign flip through a pole leaves a large residual at the "root".
        if (std::abs(f(root)) <= std::min(std::abs(ga), std::abs(gb))) roots.push_back(root);
      } catch (const Error&) {
      }
    }
    return roots;
  };

  const std::vector<double> roots1 = roots_of(0);
  const std::vector<double> roots2 = roots_of(1);
  if (roots1.empty() || roots2.empty()) {
    if (!roots1.empty()) result.b01 = roots1.front();
    if (!roots2.empty()) result.b02 = roots2.front();
    return result;
  }

  double best = std::numeric_limits<double>::infinity();
  for (double r1 : roots1)
    for (double r2 : roots2)
      if (std::abs(r1 - r2) < best) {
        best = std::abs(r1 - r2);
        result.b01 = r1;
        result.b02 = r2;
      }

  const double mean = 0.5 * (*result.b01 + *result.b02);
  result.accepted = best < config.epsilon;
  if (result.accepted) result.b0 = mean;
  try {
    const LinearFit fit = solve_linear_fit(p0, p1, p2, mean, l);
    result.v0 = fit.v0;
    result.mn = fit.mn;
    result.condition_number = fit.condition_number;
  } catch (const Error&) {
    // The mean of two valid roots can itself fall in a guard band.
    result.accepted = false;
    result.b0.reset();
  }
  return result;
}

FitResult fit_fixed_b0(const TimedPoint& p0, const TimedPoint& p1, const TimedPoint& p2, double l,
                       double b0) {
  const LinearFit fit = solve_linear_fit(p0, p1, p2, b0, l);
  FitResult result;
  result.v0 = fit.v0;
  result.mn = fit.mn;
  result.b0 = b0;
  result.accepted = true;
  result.fixed_b0 = true;
  result.l = l;
  result.condition_number = fit.condition_number;
  result.window = {p0, p1, p2};
  return result;
}

double b0_equilibrium_estimate(double c0, double A0, double l) {
  if (l == 0.0) throw DomainError("b0_equilibrium_estimate: l must be non-zero");
  // Stable form of (l - sign(l) sqrt(l^2 + 8 c0 A0)) / 2 via the product of roots.
  const double disc = std::sqrt(l * l + 8.0 * c0 * A0);
  const double large = 0.5 * (l + std::copysign(disc, l));
  return -2.0 * c0 * A0 / large;
}

double b0_asymptotic_estimate(double c0, double A0, double l) {
  if (l == 0.0) throw DomainError("b0_asymptotic_estimate: l must be non-zero");
  return -2.0 * c0 * A0 / l;
}

std::vector<FitResult> sweep_points(std::span<const TimedPoint> points, double l,
                                    const FitConfig& config) {
  if (points.size() < 3) throw DomainError("sweep_points: need at least three points");
  std::vector<FitResult> out;
  out.reserve(points.size() - 2);
  for (std::size_t i = 0; i + 2 < points.size(); ++i) {
    FitResult r;
    try {
      r = find_b0(points[i], points[i + 1], points[i + 2], l, config);
    } catch (const DegenerateWindow&) {
      r.epsilon_used = config.epsilon;
      r.bound_used = config.bound;
      r.l = l;
      r.window = {points[i], points[i + 1], points[i + 2]};
    }
    r.window_start = i;
    out.push_back(r);
  }
  return out;
}

FitResult fit_track_window(const Track& track, std::size_t start, const FitConfig& config,
                           std::optional<double> fixed_b0) {
  if (start + 2 >= track.points.size())
    throw DomainError(fmt::format("window start {} needs three points but the track has {}", start,
                                  track.points.size()));
  const GeoPoint origin = track.points[start].position();
  std::array<TimedPoint, 3> w;
  for (std::size_t k = 0; k < 3; ++k) {
    const TrackPoint& p = track.points[start + k];
    w[k] = {p.t, project(p.position(), origin)};
  }
  const double l = coriolis_parameter(origin.lat);
  FitResult r = fixed_b0 ? fit_fixed_b0(w[0], w[1], w[2], l, *fixed_b0)
                         : find_b0(w[0], w[1], w[2], l, config);
  if (fixed_b0) {
    r.epsilon_used = config.epsilon;
    r.bound_used = config.bound;
  }
  r.origin = origin;
  r.window_start = start;
  return r;
}

std::vector<FitResult> sweep_track(const Track& track, const FitConfig& config) {
  if (track.points.size() < 3) throw DomainError("sweep_track: need at least three points");
  std::vector<FitResult> out;
  out.reserve(track.points.size() - 2);
  for (std::size_t i = 0; i + 2 < track.points.size(); ++i) {
    try {
      out.push_back(fit_track_window(track, i, config));
    } catch (const Error&) {
      // Degenerate or guarded windows are rejection verdicts.
      FitResult r;
      r.epsilon_used = config.epsilon;
      r.bound_used = config.bound;
      r.window_start = i;
      r.origin = track.points[i].position();
      out.push_back(r);
    }
  }
  return out;
}

std::vector<TimedPoint> forecast(const FitResult& fit, double l, double horizon, double step) {
  if (!fit.accepted || !fit.b0 || !fit.v0 || !fit.mn)
    throw PreconditionError("forecast: fit was not accepted");
  if (!(horizon >= 0.0) || !(step > 0.0))
    throw DomainError("forecast: horizon must be non-negative and step positive");
  const TimedPoint& anchor = fit.window[0];
  const TrajectoryCoefficients c = closed_form_coefficients(anchor.x, *fit.v0, *fit.mn, l, *fit.b0);

  std::vector<TimedPoint> out;
  const auto steps = static_cast<std::size_t>(std::floor(horizon / step + 1e-9));
  out.reserve(steps + 2);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double tau = std::min(static_cast<double>(k) * step, horizon);
    out.push_back({anchor.t + tau, eval_trajectory(c, tau)});
  }
  if (horizon - static_cast<double>(steps) * step > 1e-9 * step)
    out.push_back({anchor.t + horizon, eval_trajectory(c, horizon)});
  return out;
}

Track forecast_track(const FitResult& fit, double horizon, double step) {
  if (!fit.origin) throw PreconditionError("forecast_track: fit has no geographic origin");
  Track track;
  for (const TimedPoint& p : forecast(fit, fit.l, horizon, step)) {
    const GeoPoint g = unproject(p.x, *fit.origin);
    track.points.push_back({p.t, g.lat, g.lon, {}});
  }
  track.origin = track.points.front().position();
  return track;
}

}  // namespace tcvortex
