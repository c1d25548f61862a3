#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "tcvortex/errors.hpp"

namespace tcvortex {

inline constexpr double kDefaultTimeStep = 60.0;

template <std::size_t N>
using StateVector = std::array<double, N>;

template <std::size_t N>
struct Sample {
  double t;
  StateVector<N> y;
};

/// Accepts every finite state.
struct AcceptAll {
  template <std::size_t N>
  bool operator()(const StateVector<N>&) const noexcept {
    return true;
  }
};

namespace detail {

template <std::size_t N>
StateVector<N> axpy(const StateVector<N>& y, double h, const StateVector<N>& k) {
  StateVector<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h * k[i];
  return out;
}

template <std::size_t N>
bool all_finite(const StateVector<N>& y) {
  for (double v : y)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace detail

/// One classical fourth-order Runge-Kutta step of size h.
template <std::size_t N, class Rhs>
StateVector<N> rk4_step(Rhs&& rhs, double t, const StateVector<N>& y, double h) {
  const StateVector<N> k1 = rhs(t, y);
  const StateVector<N> k2 = rhs(t + 0.5 * h, detail::axpy(y, 0.5 * h, k1));
  const StateVector<N> k3 = rhs(t + 0.5 * h, detail::axpy(y, 0.5 * h, k2));
  const StateVector<N> k4 = rhs(t + h, detail::axpy(y, h, k3));
  StateVector<N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

/// Integrates y' = rhs(t, y) from t0 to t_end with fixed-step RK4.
///
/// Samples are returned at t0, t0 + dt, ..., t_end; when t_end - t0 is not a
/// multiple of dt the last step is shortened to land on t_end. Sample times
/// are computed as t0 + i * dt so no rounding accumulates.
///
/// Throws IntegrationBlowup with the last valid time when a step produces a
/// non-finite state or a state rejected by `guard`.
template <std::size_t N, class Rhs, class Guard = AcceptAll>
std::vector<Sample<N>> integrate(Rhs&& rhs, const StateVector<N>& y0, double dt, double t_end,
                                 double t0 = 0.0, Guard guard = {}) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("integrate: dt must be positive");
  if (!(t_end >= t0) || !std::isfinite(t_end))
    throw DomainError("integrate: t_end must not precede the start time");
  if (!detail::all_finite(y0) || !guard(y0))
    throw IntegrationBlowup("integrate: invalid initial state", t0);

  const double span = t_end - t0;
  // Tolerate a t_end that is a multiple of dt up to rounding.
  const auto steps = static_cast<std::size_t>(std::ceil(span / dt - 1e-9));

  std::vector<Sample<N>> out;
  out.reserve(steps + 1);
  out.push_back({t0, y0});
  StateVector<N> y = y0;
  for (std::size_t i = 1; i <= steps; ++i) {
    const double t_prev = out.back().t;
    const double t_next = (i == steps) ? t_end : t0 + static_cast<double>(i) * dt;
    y = rk4_step(rhs, t_prev, y, t_next - t_prev);
    if (!detail::all_finite(y))
      throw IntegrationBlowup("integrate: non-finite state after t = " + std::to_string(t_prev),
                              t_prev);
    if (!guard(y))
      throw IntegrationBlowup("integrate: non-physical state after t = " + std::to_string(t_prev),
                              t_prev);
    out.push_back({t_next, y});
  }
  return out;
}

}  // namespace tcvortex
