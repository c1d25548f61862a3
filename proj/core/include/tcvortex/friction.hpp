#pragma once

#include <vector>

#include "tcvortex/integrator.hpp"
#include "tcvortex/model.hpp"

namespace tcvortex {

/// Barotropic right-hand side with the surface-friction damping -k U: the
/// divergence and vorticity equations gain -k a and -k b, everything else is
/// unchanged. With k = 0 it equals barotropic_rhs.
BarotropicState friction_rhs(const BarotropicState& s, const ModelParams& p);

/// Summary of a damped run.
///
/// `invariant_drift` is the largest relative change of the phase constant c4
/// (recomputed from each state) against its initial value.
/// `convergent_tail` is the length of the terminal interval over which a < 0
/// holds at every sample. A run counts as collapsed when the drift exceeds
/// `kCollapseDriftThreshold` and the convergent tail covers the final day (or
/// the final third of shorter runs).
struct CollapseDiagnostics {
  double min_a = 0.0;
  double max_abs_b = 0.0;
  double final_A = 0.0;
  double final_a = 0.0;
  double final_b = 0.0;
  double invariant_drift = 0.0;
  double convergent_tail = 0.0;
  bool collapsed = false;
};

inline constexpr double kCollapseDriftThreshold = 1e-2;

struct CollapseRun {
  std::vector<BarotropicState> series;
  CollapseDiagnostics diagnostics;
};

/// Integrates friction_rhs from s0 for `duration` seconds. Accepts k = 0 so
/// the undamped reference run goes through the same path.
CollapseRun collapse_simulation(const ModelParams& p, const BarotropicState& s0,
                                double dt = kDefaultTimeStep,
                                double duration = 3.0 * kSecondsPerDay);

/// Diagnostics of an existing damped (or undamped) series.
CollapseDiagnostics diagnose_collapse(const std::vector<BarotropicState>& series,
                                      const ModelParams& p);

}  // namespace tcvortex
