#pragma once

#include <array>
#include <cstddef>

namespace tcvortex {

/// Angular speed of the Earth's rotation, s^-1.
inline constexpr double kEarthAngularSpeed = 7.2921159e-5;

/// Mass-specific gas constant of dry air, J kg^-1 K^-1.
inline constexpr double kDryAirGasConstant = 287.0;

inline constexpr double kSecondsPerHour = 3600.0;
inline constexpr double kSecondsPerDay = 86400.0;

/// Returns the height-averaged ("two-dimensional") adiabatic exponent
/// (2 g - 1) / g for a 3D specific heat ratio g > 1.
double two_dim_gamma(double gamma3d);

/// Returns 2 omega sin(latitude), latitude in degrees.
double coriolis_parameter(double latitude_deg, double omega = kEarthAngularSpeed);

/// Physical and model constants shared by every dynamics module.
///
/// `c0` multiplies the gradient of the renormalized pressure in the barotropic
/// momentum equation. `R` enters the baroclinic momentum equation. The
/// viscosity/heat set (mu, lambda, kappa, xi) only reaches the baroclinic
/// central-temperature equation; `k` is the surface-friction coefficient.
struct ModelParams {
  double gamma = 9.0 / 7.0;  // two_dim_gamma(1.4)
  double l = 1e-4;
  double c0 = 0.1;
  double R = kDryAirGasConstant;
  double mu = 0.0;
  double lambda = 0.0;
  double kappa = 0.0;
  double xi = 0.0;
  double k = 0.0;

  /// Throws DomainError unless 1 < gamma < 2, c0 > 0, R > 0, k >= 0 and all
  /// fields are finite.
  void validate() const;
};

/// Coefficients of the polynomial barotropic solution plus eye kinematics.
///
/// Velocity near the eye is u = a r + b r_perp with r_perp = (x2, -x1); the
/// renormalized pressure is A |r|^2 + M x1 + N x2 + K. Positions are in the
/// local l-plane, meters.
struct BarotropicState {
  static constexpr std::size_t kDim = 10;
  using Vector = std::array<double, kDim>;

  double a = 0.0;
  double b = 0.0;
  double A = 0.0;
  double M = 0.0;
  double N = 0.0;
  double K = 0.0;
  double V1 = 0.0;
  double V2 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double t = 0.0;

  Vector to_vector() const { return {a, b, A, M, N, K, V1, V2, x1, x2}; }

  static BarotropicState from_vector(const Vector& v, double t) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], t};
  }
};

/// Coefficients of the baroclinic solution: temperature A1 |r|^2 + M1 x1 +
/// N1 x2 + K1 and spatially uniform height-averaged density K2.
struct BaroclinicState {
  static constexpr std::size_t kDim = 11;
  using Vector = std::array<double, kDim>;

  double a = 0.0;
  double b = 0.0;
  double A1 = 0.0;
  double M1 = 0.0;
  double N1 = 0.0;
  double K1 = 0.0;
  double K2 = 0.0;
  double V1 = 0.0;
  double V2 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double t = 0.0;

  Vector to_vector() const { return {a, b, A1, M1, N1, K1, K2, V1, V2, x1, x2}; }

  static BaroclinicState from_vector(const Vector& v, double t) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], t};
  }
};

/// First integrals of a coefficient system.
///
/// c1: vorticity-curvature coupling, b = l/2 + c1 A^(1/gamma).
/// c3: central value, K = c3 A^((gamma-1)/gamma) (barotropic only).
/// c4: constant of the phase curves of the reduced (A, a) system.
struct IntegrationConstants {
  double c1 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
};

/// An equilibrium (A0, 0) of the reduced system and its vorticity b0.
struct Equilibrium {
  double A0 = 0.0;
  double b0 = 0.0;
};

}  // namespace tcvortex
