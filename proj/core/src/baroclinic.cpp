#include "tcvortex/baroclinic.hpp"

#include <cmath>

#include "reduced_system.hpp"
#include "tcvortex/errors.hpp"

namespace tcvortex {

namespace {

using Vector = BaroclinicState::Vector;

}  // namespace

BaroclinicState baroclinic_rhs(const BaroclinicState& s, const ModelParams& p) {
  if (!(s.K2 > 0.0)) throw DomainError("baroclinic_rhs: density K2 must be positive");
  const double g = p.gamma;
  BaroclinicState d;
  d.a = -s.a * s.a + s.b * s.b - p.l * s.b - 4.0 * p.R * s.A1;
  d.b = -2.0 * s.a * s.b + p.l * s.a;
  d.A1 = -2.0 * g * s.a * s.A1;
  d.M1 = -(2.0 * g - 1.0) * s.a * s.M1 + s.b * s.N1;
  d.N1 = -(2.0 * g - 1.0) * s.a * s.N1 - s.b * s.M1;
  d.K1 = -2.0 * (g - 1.0) * s.a * s.K1 +
         2.0 * (g - 1.0) * (2.0 * p.mu + p.lambda) * s.a * s.a / p.R +
         p.kappa / s.K2 * (p.xi - 4.0 * s.A1);
  d.K2 = -2.0 * s.a * s.K2;
  d.V1 = p.l * s.V2 - 2.0 * p.R * s.M1;
  d.V2 = -p.l * s.V1 - 2.0 * p.R * s.N1;
  d.x1 = s.V1;
  d.x2 = s.V2;
  d.t = 1.0;
  return d;
}

IntegrationConstants baroclinic_constants(const BaroclinicState& s, const ModelParams& p) {
  if (!(s.A1 > 0.0)) throw DomainError("baroclinic_constants: A1 must be positive");
  const double g = p.gamma;
  IntegrationConstants c;
  c.c1 = detail::vorticity_constant(s.b, s.A1, p.l, g);
  c.c3 = s.K2 * std::pow(s.A1, -1.0 / g);
  c.c4 = detail::phase_constant(s.a, s.A1, c.c1, p.l, g, 4.0 * p.R);
  return c;
}

double baroclinic_relation_residual(const BaroclinicState& s, const ModelParams& p, double c1bar) {
  if (!(s.A1 > 0.0)) throw DomainError("baroclinic_relation_residual: A1 must be positive");
  const double coupling = c1bar * std::pow(s.A1, 1.0 / p.gamma);
  const double scale = 0.5 * std::abs(p.l) + std::abs(coupling);
  const double diff = s.b - 0.5 * p.l - coupling;
  return scale > 0.0 ? diff / scale : diff;
}

Equilibrium equilibrium_baroclinic(double c1bar, const ModelParams& p) {
  return detail::reduced_equilibrium(c1bar, p.l, p.gamma, 4.0 * p.R);
}

BaroclinicState baroclinic_equilibrium_state(double c1bar, const ModelParams& p,
                                             const BaroclinicState& rest) {
  const Equilibrium eq = equilibrium_baroclinic(c1bar, p);
  BaroclinicState s = rest;
  s.a = 0.0;
  s.A1 = eq.A0;
  s.b = eq.b0;
  return s;
}

std::vector<BaroclinicState> simulate_baroclinic(const BaroclinicState& s0, const ModelParams& p,
                                                 double dt, double duration) {
  p.validate();
  const auto rhs = [&p](double t, const Vector& y) {
    return baroclinic_rhs(BaroclinicState::from_vector(y, t), p).to_vector();
  };
  const auto positive = [](const Vector& y) { return y[2] > 0.0 && y[6] > 0.0; };
  const auto samples = integrate(rhs, s0.to_vector(), dt, s0.t + duration, s0.t, positive);

  std::vector<BaroclinicState> out;
  out.reserve(samples.size());
  for (const auto& sample : samples) out.push_back(BaroclinicState::from_vector(sample.y, sample.t));
  return out;
}

}  // namespace tcvortex
