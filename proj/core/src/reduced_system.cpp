#include "reduced_system.hpp"

#include <algorithm>
#include <cmath>

#include "tcvortex/errors.hpp"
#include "tcvortex/roots.hpp"

namespace tcvortex::detail {

namespace {

constexpr double kRootBracketLo = 1e-15;
constexpr double kRootBracketHi = 1.0;
constexpr int kRootIterations = 200;

}  // namespace

double vorticity_constant(double b, double A, double l, double gamma) {
  if (!(A > 0.0)) throw DomainError("curvature coefficient must be positive");
  return (b - 0.5 * l) * std::pow(A, -1.0 / gamma);
}

double phase_constant(double a, double A, double c1, double l, double gamma, double q) {
  if (!(A > 0.0)) throw DomainError("curvature coefficient must be positive");
  const double bracket =
      a * a + c1 * c1 * std::pow(A, 2.0 / gamma) + 0.25 * l * l - q * A / (gamma - 1.0);
  return bracket * std::pow(A, -1.0 / gamma);
}

double phase_residual(double a, double A, double c1, double c4, double l, double gamma, double q) {
  if (!(A > 0.0)) throw DomainError("curvature coefficient must be positive");
  const double curve = c4 * std::pow(A, 1.0 / gamma) - c1 * c1 * std::pow(A, 2.0 / gamma) -
                       0.25 * l * l + q * A / (gamma - 1.0);
  const double scale = std::max(a * a, l * l);
  const double diff = a * a - curve;
  return scale > 0.0 ? diff / scale : diff;
}

Equilibrium reduced_equilibrium(double c1, double l, double gamma, double q) {
  if (c1 == 0.0) throw NoEquilibrium("equilibrium: zero vorticity constant admits no positive root");
  const auto f = [&](double A) {
    return -0.25 * l * l + c1 * c1 * std::pow(A, 2.0 / gamma) - q * A;
  };
  if (!(f(kRootBracketLo) < 0.0 && f(kRootBracketHi) > 0.0))
    throw NoEquilibrium("equilibrium: no positive root in [1e-15, 1]");
  const double A0 = bisect(f, kRootBracketLo, kRootBracketHi, 0.0, kRootIterations);
  return {A0, 0.5 * l + c1 * std::pow(A0, 1.0 / gamma)};
}

}  // namespace tcvortex::detail
