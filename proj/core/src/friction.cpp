#include "tcvortex/friction.hpp"

#include <algorithm>
#include <cmath>

#include "tcvortex/barotropic.hpp"
#include "tcvortex/errors.hpp"

namespace tcvortex {

namespace {

using Vector = BarotropicState::Vector;

}  // namespace

BarotropicState friction_rhs(const BarotropicState& s, const ModelParams& p) {
  BarotropicState d = barotropic_rhs(s, p);
  d.a -= p.k * s.a;
  d.b -= p.k * s.b;
  return d;
}

CollapseDiagnostics diagnose_collapse(const std::vector<BarotropicState>& series,
                                      const ModelParams& p) {
  CollapseDiagnostics diag;
  if (series.empty()) return diag;

  const double c4_ref = integration_constants(series.front(), p).c4;
  diag.min_a = series.front().a;
  for (const auto& s : series) {
    diag.min_a = std::min(diag.min_a, s.a);
    diag.max_abs_b = std::max(diag.max_abs_b, std::abs(s.b));
    const double c4 = integration_constants(s, p).c4;
    const double change = std::abs(c4 - c4_ref);
    diag.invariant_drift =
        std::max(diag.invariant_drift, c4_ref != 0.0 ? change / std::abs(c4_ref) : change);
  }

  const BarotropicState& last = series.back();
  diag.final_A = last.A;
  diag.final_a = last.a;
  diag.final_b = last.b;

  // Walk back while the flow stays convergent.
  auto it = series.rbegin();
  while (it != series.rend() && it->a < 0.0) ++it;
  const double tail_start = (it == series.rbegin()) ? last.t : std::prev(it)->t;
  diag.convergent_tail = last.t - tail_start;

  const double span = last.t - series.front().t;
  const double required_tail = std::min(kSecondsPerDay, span / 3.0);
  diag.collapsed = diag.invariant_drift > kCollapseDriftThreshold && last.a < 0.0 &&
                   diag.convergent_tail >= required_tail;
  return diag;
}

CollapseRun collapse_simulation(const ModelParams& p, const BarotropicState& s0, double dt,
                                double duration) {
  p.validate();
  const auto rhs = [&p](double t, const Vector& y) {
    return friction_rhs(BarotropicState::from_vector(y, t), p).to_vector();
  };
  const auto positive = [](const Vector& y) { return y[2] > 0.0 && y[5] > 0.0; };
  const auto samples = integrate(rhs, s0.to_vector(), dt, s0.t + duration, s0.t, positive);

  CollapseRun run;
  run.series.reserve(samples.size());
  for (const auto& sample : samples)
    run.series.push_back(BarotropicState::from_vector(sample.y, sample.t));
  run.diagnostics = diagnose_collapse(run.series, p);
  return run;
}

}  // namespace tcvortex
