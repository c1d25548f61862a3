#pragma once

#include <vector>

#include "tcvortex/integrator.hpp"
#include "tcvortex/model.hpp"

namespace tcvortex {

/// Time derivative of the barotropic coefficient system. Each field of the
/// returned state holds the derivative of the same field of `s`; `t` is 1.
BarotropicState barotropic_rhs(const BarotropicState& s, const ModelParams& p);

/// First integrals c1, c3, c4 evaluated at `s`. Throws DomainError if A <= 0.
IntegrationConstants integration_constants(const BarotropicState& s, const ModelParams& p);

/// Residual of the phase-curve relation for constants `c`, normalized by
/// max(a^2, l^2). Zero on exact solutions. Throws DomainError if A <= 0.
double phase_invariant_residual(const BarotropicState& s, const ModelParams& p,
                                const IntegrationConstants& c);

/// Center (A0, 0) of the reduced (A, a) system for vorticity constant c1.
/// Throws NoEquilibrium if c1 == 0 or no root lies in [1e-15, 1].
Equilibrium equilibrium(double c1, const ModelParams& p);

/// The state sitting exactly on the equilibrium selected by c1, with the
/// given gradient, central value and eye kinematics.
BarotropicState equilibrium_state(double c1, const ModelParams& p, const BarotropicState& rest);

/// RK4 run of the barotropic system over `duration` seconds from s0.t.
/// Throws IntegrationBlowup if A or K leaves the positive half-line or the
/// state stops being finite.
std::vector<BarotropicState> simulate_barotropic(const BarotropicState& s0, const ModelParams& p,
                                                 double dt = kDefaultTimeStep,
                                                 double duration = 3.0 * kSecondsPerDay);

/// Largest relative change of c1, c3 and c4 along a series with respect to
/// its first state.
struct ConstantsDrift {
  double c1 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
};

ConstantsDrift constants_drift(const std::vector<BarotropicState>& series, const ModelParams& p);

}  // namespace tcvortex
