#include "tcvortex/barotropic.hpp"

#include <algorithm>
#include <cmath>

#include "reduced_system.hpp"
#include "tcvortex/errors.hpp"

namespace tcvortex {

namespace {

using Vector = BarotropicState::Vector;

double relative_change(double value, double reference) {
  const double diff = std::abs(value - reference);
  return reference != 0.0 ? diff / std::abs(reference) : diff;
}

}  // namespace

BarotropicState barotropic_rhs(const BarotropicState& s, const ModelParams& p) {
  const double g = p.gamma;
  BarotropicState d;
  d.a = -s.a * s.a + s.b * s.b - p.l * s.b - 2.0 * p.c0 * s.A;
  d.b = -2.0 * s.a * s.b + p.l * s.a;
  d.A = -2.0 * g * s.a * s.A;
  d.M = -(2.0 * g - 1.0) * s.a * s.M + s.b * s.N;
  d.N = -(2.0 * g - 1.0) * s.a * s.N - s.b * s.M;
  d.K = -2.0 * (g - 1.0) * s.a * s.K;
  d.V1 = p.l * s.V2 - p.c0 * s.M;
  d.V2 = -p.l * s.V1 - p.c0 * s.N;
  d.x1 = s.V1;
  d.x2 = s.V2;
  d.t = 1.0;
  return d;
}

IntegrationConstants integration_constants(const BarotropicState& s, const ModelParams& p) {
  if (!(s.A > 0.0)) throw DomainError("integration_constants: A must be positive");
  const double g = p.gamma;
  IntegrationConstants c;
  c.c1 = detail::vorticity_constant(s.b, s.A, p.l, g);
  c.c3 = s.K * std::pow(s.A, -(g - 1.0) / g);
  c.c4 = detail::phase_constant(s.a, s.A, c.c1, p.l, g, 2.0 * p.c0);
  return c;
}

double phase_invariant_residual(const BarotropicState& s, const ModelParams& p,
                                const IntegrationConstants& c) {
  if (!(s.A > 0.0)) throw DomainError("phase_invariant_residual: A must be positive");
  return detail::phase_residual(s.a, s.A, c.c1, c.c4, p.l, p.gamma, 2.0 * p.c0);
}

Equilibrium equilibrium(double c1, const ModelParams& p) {
  return detail::reduced_equilibrium(c1, p.l, p.gamma, 2.0 * p.c0);
}

BarotropicState equilibrium_state(double c1, const ModelParams& p, const BarotropicState& rest) {
  const Equilibrium eq = equilibrium(c1, p);
  BarotropicState s = rest;
  s.a = 0.0;
  s.A = eq.A0;
  s.b = eq.b0;
  return s;
}

std::vector<BarotropicState> simulate_barotropic(const BarotropicState& s0, const ModelParams& p,
                                                 double dt, double duration) {
  p.validate();
  const auto rhs = [&p](double t, const Vector& y) {
    return barotropic_rhs(BarotropicState::from_vector(y, t), p).to_vector();
  };
  const auto positive = [](const Vector& y) { return y[2] > 0.0 && y[5] > 0.0; };
  const auto samples = integrate(rhs, s0.to_vector(), dt, s0.t + duration, s0.t, positive);

  std::vector<BarotropicState> out;
  out.reserve(samples.size());
  for (const auto& sample : samples) out.push_back(BarotropicState::from_vector(sample.y, sample.t));
  return out;
}

ConstantsDrift constants_drift(const std::vector<BarotropicState>& series, const ModelParams& p) {
  ConstantsDrift drift;
  if (series.empty()) return drift;
  const IntegrationConstants ref = integration_constants(series.front(), p);
  for (const auto& s : series) {
    const IntegrationConstants c = integration_constants(s, p);
    drift.c1 = std::max(drift.c1, relative_change(c.c1, ref.c1));
    drift.c3 = std::max(drift.c3, relative_change(c.c3, ref.c3));
    drift.c4 = std::max(drift.c4, relative_change(c.c4, ref.c4));
  }
  return drift;
}

}  // namespace tcvortex
