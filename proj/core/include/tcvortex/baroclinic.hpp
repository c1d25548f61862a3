#pragma once

#include <vector>

#include "tcvortex/integrator.hpp"
#include "tcvortex/model.hpp"

namespace tcvortex {

/// Time derivative of the baroclinic coefficient system. Fields of the result
/// hold derivatives of the matching fields of `s`. Throws DomainError if
/// K2 <= 0.
BaroclinicState baroclinic_rhs(const BaroclinicState& s, const ModelParams& p);

/// c1 (vorticity-curvature coupling), c3 = K2 A1^(-1/gamma) and the phase
/// constant c4 of the reduced (A1, a) system. Throws DomainError if A1 <= 0.
IntegrationConstants baroclinic_constants(const BaroclinicState& s, const ModelParams& p);

/// b - l/2 - c1 A1^(1/gamma), divided by |l|/2 + |c1| A1^(1/gamma).
double baroclinic_relation_residual(const BaroclinicState& s, const ModelParams& p, double c1bar);

/// Center (A0bar, 0) of the reduced baroclinic system; the barotropic
/// equilibrium with 2 c0 replaced by 4 R.
Equilibrium equilibrium_baroclinic(double c1bar, const ModelParams& p);

BaroclinicState baroclinic_equilibrium_state(double c1bar, const ModelParams& p,
                                             const BaroclinicState& rest);

/// RK4 run over `duration` seconds. Throws IntegrationBlowup if A1 or K2
/// leaves the positive half-line. K1 is not guarded.
std::vector<BaroclinicState> simulate_baroclinic(const BaroclinicState& s0, const ModelParams& p,
                                                 double dt = kDefaultTimeStep,
                                                 double duration = 3.0 * kSecondsPerDay);

}  // namespace tcvortex
