#pragma once

// Shared algebra of the reduced (A, a) system
//   A' = -2 gamma a A,   a' = -a^2 - l^2/4 + c1^2 A^(2/gamma) - q A,
// where q = 2 c0 in the barotropic model and q = 4 R in the baroclinic one.

#include "tcvortex/model.hpp"

namespace tcvortex::detail {

/// c1 = (b - l/2) A^(-1/gamma).
double vorticity_constant(double b, double A, double l, double gamma);

/// Phase-curve constant c4 such that
///   a^2 = c4 A^(1/gamma) - c1^2 A^(2/gamma) - l^2/4 + q A / (gamma - 1).
double phase_constant(double a, double A, double c1, double l, double gamma, double q);

/// a^2 minus the phase-curve right-hand side, divided by max(a^2, l^2).
double phase_residual(double a, double A, double c1, double c4, double l, double gamma, double q);

/// Positive root A0 of -l^2/4 + c1^2 A^(2/gamma) - q A and b0 = l/2 + c1 A0^(1/gamma).
Equilibrium reduced_equilibrium(double c1, double l, double gamma, double q);

}  // namespace tcvortex::detail
