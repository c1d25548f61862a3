#include "tcvortex/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "tcvortex/errors.hpp"

namespace tcvortex {

double two_dim_gamma(double gamma3d) {
  if (!(gamma3d > 1.0) || !std::isfinite(gamma3d))
    throw DomainError("two_dim_gamma: specific heat ratio must exceed 1, got " +
                      fmt::format("{}", gamma3d));
  return (2.0 * gamma3d - 1.0) / gamma3d;
}

double coriolis_parameter(double latitude_deg, double omega) {
  if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0))
    throw DomainError("coriolis_parameter: latitude out of [-90, 90]: " +
                      fmt::format("{}", latitude_deg));
  return 2.0 * omega * std::sin(latitude_deg * std::numbers::pi / 180.0);
}

void ModelParams::validate() const {
  for (double v : {gamma, l, c0, R, mu, lambda, kappa, xi, k})
    if (!std::isfinite(v)) throw DomainError("ModelParams: non-finite field");
  if (!(gamma > 1.0 && gamma < 2.0))
    throw DomainError("ModelParams: gamma must lie in (1, 2), got " + fmt::format("{}", gamma));
  if (!(c0 > 0.0)) throw DomainError("ModelParams: c0 must be positive");
  if (!(R > 0.0)) throw DomainError("ModelParams: R must be positive");
  if (k < 0.0) throw DomainError("ModelParams: friction coefficient k must be non-negative");
}

}  // namespace tcvortex
