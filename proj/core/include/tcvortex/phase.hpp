#pragma once

#include <vector>

#include "tcvortex/integrator.hpp"
#include "tcvortex/model.hpp"

namespace tcvortex {

/// An orbit of the (possibly damped) reduced system in the (A, a) plane.
struct PhaseOrbit {
  std::vector<BarotropicState> states;
  /// Time of one full revolution around the center; zero if none completed.
  double period = 0.0;
  bool closed = false;
  /// max(|dA| / A_start, |da| / max|a|) between the first and last states.
  double closure_error = 0.0;
};

/// Integrates friction_rhs (k taken from p) from s0. Winding is measured
/// around the center selected by the c1 of s0. When `stop_at_revolution` is
/// set the run ends exactly at the first full revolution (the final step is
/// shortened to hit it); otherwise it runs for `max_duration`.
PhaseOrbit trace_orbit(const BarotropicState& s0, const ModelParams& p,
                       double dt = kDefaultTimeStep, double max_duration = 10.0 * kSecondsPerDay,
                       bool stop_at_revolution = true);

/// `count` start states on the a = 0 axis with A = A0 (1 + spread * i / count),
/// i = 1..count, around the center of base's c1. Other fields copy `base`.
std::vector<BarotropicState> phase_initial_states(const BarotropicState& base, const ModelParams& p,
                                                  int count, double spread);

}  // namespace tcvortex
