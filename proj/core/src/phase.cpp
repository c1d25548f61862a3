#include "tcvortex/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tcvortex/barotropic.hpp"
#include "tcvortex/errors.hpp"
#include "tcvortex/friction.hpp"
#include "tcvortex/roots.hpp"

namespace tcvortex {

namespace {

using Vector = BarotropicState::Vector;

double wrap_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  x = std::fmod(x + std::numbers::pi, two_pi);
  if (x < 0.0) x += two_pi;
  return x - std::numbers::pi;
}

}  // namespace

PhaseOrbit trace_orbit(const BarotropicState& s0, const ModelParams& p, double dt,
                       double max_duration, bool stop_at_revolution) {
  p.validate();
  if (!(dt > 0.0)) throw DomainError("trace_orbit: dt must be positive");
  const Equilibrium center = equilibrium(integration_constants(s0, p).c1, p);
  const double a_scale = p.l != 0.0 ? std::abs(p.l) : 1e-5;
  const auto angle_of = [&](const Vector& y) {
    return std::atan2(y[0] / a_scale, (y[2] - center.A0) / center.A0);
  };
  const auto rhs = [&p](double t, const Vector& y) {
    return friction_rhs(BarotropicState::from_vector(y, t), p).to_vector();
  };

  constexpr double full_turn = 2.0 * std::numbers::pi;
  PhaseOrbit orbit;
  orbit.states.push_back(s0);
  Vector y = s0.to_vector();
  double t = s0.t;
  double winding = 0.0;
  double angle = angle_of(y);
  const double t_stop = s0.t + max_duration;

  while (t < t_stop) {
    const double h = std::min(dt, t_stop - t);
    const Vector next = rk4_step(rhs, t, y, h);
    if (!detail::all_finite(next) || !(next[2] > 0.0))
      throw IntegrationBlowup("trace_orbit: non-physical state", t);
    const double next_angle = angle_of(next);
    const double next_winding = winding + wrap_angle(next_angle - angle);

    if (stop_at_revolution && std::abs(next_winding) >= full_turn) {
      // Shorten the step so the winding lands on one full turn.
      const double target = std::copysign(full_turn, next_winding);
      const auto excess = [&](double hh) {
        return winding + wrap_angle(angle_of(rk4_step(rhs, t, y, hh)) - angle) - target;
      };
      const double h_hit = bisect(excess, 0.0, h, 0.0, 100);
      const Vector last = rk4_step(rhs, t, y, h_hit);
      orbit.states.push_back(BarotropicState::from_vector(last, t + h_hit));
      orbit.period = t + h_hit - s0.t;
      orbit.closed = true;
      break;
    }
    y = next;
    t += h;
    angle = next_angle;
    winding = next_winding;
    orbit.states.push_back(BarotropicState::from_vector(y, t));
  }

  double max_abs_a = 0.0;
  for (const auto& s : orbit.states) max_abs_a = std::max(max_abs_a, std::abs(s.a));
  const BarotropicState& first = orbit.states.front();
  const BarotropicState& last = orbit.states.back();
  const double dA = std::abs(last.A - first.A) / first.A;
  const double da = max_abs_a > 0.0 ? std::abs(last.a - first.a) / max_abs_a : 0.0;
  orbit.closure_error = std::max(dA, da);
  return orbit;
}

std::vector<BarotropicState> phase_initial_states(const BarotropicState& base, const ModelParams& p,
                                                  int count, double spread) {
  if (count < 1) throw DomainError("phase_initial_states: count must be positive");
  const double c1 = integration_constants(base, p).c1;
  const Equilibrium center = equilibrium(c1, p);
  std::vector<BarotropicState> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) {
    BarotropicState s = base;
    s.a = 0.0;
    s.A = center.A0 * (1.0 + spread * static_cast<double>(i) / count);
    // Keep every start on the same c1 family so all orbits share the center.
    s.b = 0.5 * p.l + c1 * std::pow(s.A, 1.0 / p.gamma);
    out.push_back(s);
  }
  return out;
}

}  // namespace tcvortex
