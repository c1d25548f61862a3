#pragma once

#include <cmath>

#include "tcvortex/errors.hpp"

namespace tcvortex {

/// Bracketing bisection for a continuous f with f(lo) and f(hi) of opposite
/// sign. Stops when the bracket is narrower than x_tol, when the midpoint can
/// no longer be separated from an endpoint, or after max_iter halvings.
/// Throws DomainError when the endpoints do not bracket a sign change.
template <class F>
double bisect(F&& f, double lo, double hi, double x_tol = 0.0, int max_iter = 200) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi))
    throw DomainError("bisect: endpoints do not bracket a sign change");

  for (int i = 0; i < max_iter; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi || hi - lo <= x_tol) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace tcvortex
