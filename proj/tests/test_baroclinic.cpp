#include <algorithm>
#include <cmath>

#include <doctest.h>

#include <tcvortex/baroclinic.hpp>
#include <tcvortex/barotropic.hpp>
#include <tcvortex/errors.hpp>

using namespace tcvortex;

namespace {

ModelParams lat22() {
  ModelParams p;
  p.l = coriolis_parameter(22.0);
  return p;
}

// Baroclinic counterpart of the drift reference: 4 R A1 = 2 c0 A, 2 R M1 = c0 M.
BaroclinicState matched_state(const ModelParams& p) {
  BaroclinicState s;
  s.a = 1e-5;
  s.b = 5e-5;
  s.A1 = 2 * p.c0 * 1e-9 / (4 * p.R);
  s.M1 = p.c0 * 2e-3 / (2 * p.R);
  s.N1 = p.c0 * 1e-3 / (2 * p.R);
  s.K1 = 300.0;
  s.K2 = 1.0;
  s.V1 = -1.0;
  s.V2 = 1.0;
  return s;
}

}  // namespace

TEST_CASE("reduced system matches the barotropic one") {
  ModelParams p;
  BaroclinicState c;
  c.a = 1e-5;
  c.b = 5e-5;
  c.A1 = 2 * p.c0 * 1e-9 / (4 * p.R);
  c.K2 = 1.0;
  BarotropicState s;
  s.a = 1e-5;
  s.b = 5e-5;
  s.A = 1e-9;
  const auto dc = baroclinic_rhs(c, p);
  const auto ds = barotropic_rhs(s, p);
  CHECK(dc.a == doctest::Approx(ds.a).epsilon(1e-14));
  CHECK(dc.b == ds.b);
}

TEST_CASE("heat term vanishes when xi = 4 A1") {
  ModelParams p;
  p.kappa = 1.0;
  p.xi = 4e-9;
  BaroclinicState s;
  s.a = 1e-5;
  s.A1 = 1e-9;
  s.K2 = 10.0;
  CHECK(baroclinic_rhs(s, p).K1 == 0.0);
  s.K2 = 0.0;
  CHECK_THROWS_AS(baroclinic_rhs(s, p), DomainError);
}

TEST_CASE("dissipation term of the central temperature") {
  ModelParams p;
  p.mu = 2.0;
  p.lambda = 1.0;
  BaroclinicState s;
  s.a = 1e-5;
  s.A1 = 1e-9;
  s.K1 = 0.0;
  s.K2 = 1.0;
  const double want = 2 * (p.gamma - 1) * (2 * p.mu + p.lambda) * s.a * s.a / p.R;
  CHECK(baroclinic_rhs(s, p).K1 == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("baroclinic equilibrium") {
  ModelParams p;
  const double A0 = 1e-9 * 2 * p.c0 / (4 * p.R);
  const double q = 4 * p.R;
  const double c1 = -std::sqrt(p.l * p.l / 4 + q * A0) * std::pow(A0, -1.0 / p.gamma);
  const Equilibrium e = equilibrium_baroclinic(c1, p);
  CHECK(std::abs(e.A0 - A0) / A0 < 1e-15 * 10);

  const BaroclinicState s = baroclinic_equilibrium_state(c1, p, {.K2 = 1.0});
  const auto d = baroclinic_rhs(s, p);
  CHECK(std::abs(d.a) < 1e-22);
  CHECK(d.A1 == 0.0);

  // Same quadratic as the barotropic equilibrium at A = 1e-9.
  const double c1b = -std::sqrt(p.l * p.l / 4 + 2 * p.c0 * 1e-9) * std::pow(1e-9, -1.0 / p.gamma);
  CHECK(std::abs(equilibrium(c1b, p).b0 - e.b0) < 1e-12);
  CHECK_THROWS_AS(equilibrium_baroclinic(0.0, p), NoEquilibrium);
}

TEST_CASE("vorticity relation holds along orbits") {
  const ModelParams p = lat22();
  const BaroclinicState s0 = matched_state(p);
  const auto series = simulate_baroclinic(s0, p);
  const double c1 = baroclinic_constants(s0, p).c1;
  double worst = 0.0;
  for (const auto& s : series) worst = std::max(worst, std::abs(baroclinic_relation_residual(s, p, c1)));
  CHECK(worst < 1e-6);

  const IntegrationConstants c0 = baroclinic_constants(s0, p);
  const IntegrationConstants c3 = baroclinic_constants(series.back(), p);
  CHECK(std::abs(c3.c3 - c0.c3) / std::abs(c0.c3) < 1e-6);
  CHECK(std::abs(c3.c4 - c0.c4) / std::abs(c0.c4) < 1e-6);
}

TEST_CASE("viscosity and heat only reach K1") {
  ModelParams p = lat22();
  const BaroclinicState s0 = matched_state(p);
  const auto plain = simulate_baroclinic(s0, p, 60.0, 86400.0);
  p.mu = 5.0;
  p.lambda = 2.0;
  p.kappa = 0.3;
  p.xi = 1e-8;
  const auto heated = simulate_baroclinic(s0, p, 60.0, 86400.0);
  bool same = true;
  bool k1_differs = false;
  for (std::size_t i = 0; i < plain.size(); ++i) {
    auto u = plain[i].to_vector();
    auto v = heated[i].to_vector();
    k1_differs = k1_differs || u[5] != v[5];
    u[5] = v[5] = 0.0;
    same = same && u == v;
  }
  CHECK(same);
  CHECK(k1_differs);
}

TEST_CASE("matched models give the same eye trajectory") {
  const ModelParams p = lat22();
  BarotropicState b;
  b.a = 1e-5;
  b.b = 5e-5;
  b.A = 1e-9;
  b.M = 2e-3;
  b.N = 1e-3;
  b.K = 1.0;
  b.V1 = -1.0;
  b.V2 = 1.0;
  const auto tropic = simulate_barotropic(b, p);
  const auto clinic = simulate_baroclinic(matched_state(p), p);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < tropic.size(); ++i) {
    scale = std::max(scale, std::hypot(tropic[i].x1, tropic[i].x2));
    worst = std::max(worst, std::hypot(tropic[i].x1 - clinic[i].x1, tropic[i].x2 - clinic[i].x2));
  }
  CHECK(worst / scale < 1e-10);
}
