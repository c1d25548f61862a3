// Acceptance suite: one PASS/FAIL line per criterion, tolerances as pinned.
// Exit status is non-zero when any line fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <support/oracles.hpp>
#include <tcvortex/baroclinic.hpp>
#include <tcvortex/barotropic.hpp>
#include <tcvortex/fitting.hpp>
#include <tcvortex/friction.hpp>
#include <tcvortex/geo.hpp>
#include <tcvortex/model.hpp>
#include <tcvortex/track.hpp>
#include <tcvortex/trajectory.hpp>

using namespace tcvortex;

namespace {

int failures = 0;

void record(const std::string& id, bool ok, const std::string& what) {
  std::printf("%s  [%s] %s\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

constexpr double kHour = 3600.0;

// Drifting-vortex reference data.
BarotropicState drift_state() {
  BarotropicState s;
  s.a = 1e-5;
  s.b = 5e-5;
  s.A = 1e-9;
  s.N = 1e-3;
  s.M = 2e-3;
  s.K = 1.0;
  s.V1 = -1.0;
  s.V2 = 1.0;
  return s;
}

// The reference data give c1 = 0 at l = 1e-4 (no equilibrium); 22 N is used.
ModelParams drift_params() {
  ModelParams p;
  p.gamma = two_dim_gamma(1.4);
  p.l = coriolis_parameter(22.0);
  return p;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> lat(5.0, 40.0);
  bool exact = true;
  double worst_v = 0.0;
  double worst_ratio_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double l = coriolis_parameter(lat(rng));
    const Vec2 x0{5e5 * u(rng), 5e5 * u(rng)};
    const Vec2 v0{10 * u(rng), 10 * u(rng)};
    const Vec2 mn{1e-5 * u(rng), 1e-5 * u(rng)};
    double b0 = 5e-5 * u(rng);
    if (std::abs(b0) < 1e-7 || std::abs(b0 - l) < 1e-7) b0 = -1e-6;
    const auto c = closed_form_coefficients(x0, v0, mn, l, b0);
    const Vec2 x = eval_trajectory(c, 0.0);
    exact = exact && x.x1 == x0.x1 && x.x2 == x0.x2;
    auto fd = [&](double h) {
      return (eval_trajectory(c, h) - eval_trajectory(c, -h)) * (1.0 / (2.0 * h));
    };
    const double e = (fd(10.0) - v0).norm() / std::max(v0.norm(), 1.0);
    worst_v = std::max(worst_v, e);
    // Second order: halving h divides the truncation error by 4.
    const double e1 = (fd(1200.0) - v0).norm();
    const double e2 = (fd(600.0) - v0).norm();
    if (e2 > 1e-9) worst_ratio_dev = std::max(worst_ratio_dev, std::abs(e1 / e2 - 4.0));
  }
  const double elapsed = seconds_since(t0);
  record("1", exact && worst_v < 1e-6 && worst_ratio_dev < 0.05 && elapsed < 1.0,
         fmt("closed-form identities over 1000 sets: x(0)==x0 exactly=%s, max rel |v_fd-v0|=%.2e "
             "(tol 1e-6, h=10 s), max |e(2h)/e(h)-4|=%.3f (tol 0.05), %.3f s (< 1 s)",
             exact ? "yes" : "no", worst_v, worst_ratio_dev, elapsed));
}

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const ModelParams p = drift_params();
  const auto series = simulate_barotropic(drift_state(), p);
  const ConstantsDrift d = constants_drift(series, p);

  BaroclinicState c;
  c.a = 1e-5;
  c.b = 5e-5;
  c.A1 = 2 * p.c0 * 1e-9 / (4 * p.R);
  c.M1 = p.c0 * 2e-3 / (2 * p.R);
  c.N1 = p.c0 * 1e-3 / (2 * p.R);
  c.K1 = 300.0;
  c.K2 = 1.0;
  c.V1 = -1.0;
  c.V2 = 1.0;
  const auto clinic = simulate_baroclinic(c, p);
  const double c1bar = baroclinic_constants(c, p).c1;
  double relation = 0.0;
  for (const auto& s : clinic)
    relation = std::max(relation, std::abs(baroclinic_relation_residual(s, p, c1bar)));
  const double elapsed = seconds_since(t0);
  record("2",
         d.c1 < 1e-6 && d.c3 < 1e-6 && d.c4 < 1e-6 && relation < 1e-6 && elapsed < 5.0,
         fmt("invariant drift over 3 days (dt=60 s, 22N): C1=%.2e C3=%.2e C4=%.2e, baroclinic "
             "relation=%.2e (tol 1e-6), %.2f s (< 5 s)",
             d.c1, d.c3, d.c4, relation, elapsed));
}

void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const ModelParams p = drift_params();
  const BarotropicState s0 = drift_state();
  const auto series = simulate_barotropic(s0, p);
  const double c1 = integration_constants(s0, p).c1;
  const Equilibrium e = equilibrium(c1, p);
  const auto c = closed_form_coefficients({s0.x1, s0.x2}, {s0.V1, s0.V2},
                                          {p.c0 * s0.M, p.c0 * s0.N}, p.l, e.b0);
  const BarotropicState& end = series.back();
  const double sep = (Vec2{end.x1, end.x2} - eval_trajectory(c, end.t)).norm() / 1000.0;
  const double elapsed = seconds_since(t0);
  record("3", sep >= 4.0 && sep <= 100.0 && elapsed < 5.0,
         fmt("drift reference ODE vs closed form after 72 h: %.1f km (band [4, 100] km, reference ~20 km; "
             "b0=%.4e from the equilibrium of C1, l=%.4e, gamma=%.4f), %.2f s (< 5 s)",
             sep, e.b0, p.l, p.gamma, elapsed));
}

void criterion4() {
  const double exact = b0_equilibrium_estimate(0.1, 1e-9, 1e-4);
  const double asym = b0_asymptotic_estimate(0.1, 1e-9, 1e-4);
  const double residual = exact * exact - 1e-4 * exact - 2 * 0.1 * 1e-9;
  record("4", std::abs(exact - -2e-6) <= 1e-9,
         fmt("b0_equilibrium_estimate(0.1, 1e-9, 1e-4) = %.6e vs -2.000e-6 +- 1e-9 (|diff| = %.3e)",
             exact, std::abs(exact - -2e-6)));
  record("4a", std::abs(asym - -2e-6) <= 1e-9,
         fmt("asymptotic form -2 c0 A0 / l = %.6e vs -2.000e-6 +- 1e-9", asym));
  record("4b", std::abs(residual) < 1e-24,
         fmt("quadratic residual of the exact root = %.3e (< 1e-24)", residual));
}

struct SyntheticTrack {
  Track track;
  double b0;
  double l;
  GeoPoint origin;
  Vec2 v0;
  Vec2 mn;
};

std::vector<SyntheticTrack> synthetic_suite() {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> lat(10.0, 30.0), lon(110.0, 160.0);
  std::uniform_real_distribution<double> mag(1e-6, 5e-5);
  std::vector<SyntheticTrack> out;
  for (int i = 0; i < 100; ++i) {
    SyntheticTrack s;
    s.origin = {lat(rng), lon(rng)};
    s.l = coriolis_parameter(s.origin.lat);
    s.b0 = std::copysign(mag(rng), u(rng));
    double speed = 10 * std::abs(u(rng));
    const double dir = std::numbers::pi * u(rng);
    s.v0 = {speed * std::cos(dir), speed * std::sin(dir)};
    s.mn = {1e-5 * u(rng), 1e-5 * u(rng)};
    for (int k = 0; k < 8; ++k) {
      const double t = k * 3 * kHour;
      const GeoPoint g =
          unproject(oracle::direct_position({}, s.v0, s.mn, s.l, s.b0, t), s.origin);
      s.track.points.push_back({t, g.lat, g.lon, {}});
    }
    s.track.validate();
    out.push_back(s);
  }
  return out;
}

void criterion5(const std::vector<SyntheticTrack>& suite) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t windows = 0, accepted = 0, b0_ok = 0, params_ok = 0;
  std::size_t no_root1 = 0, no_root2 = 0;
  double worst_b0 = 0.0;
  for (const auto& s : suite) {
    const auto fits = sweep_track(s.track, {});
    for (const auto& f : fits) {
      ++windows;
      no_root1 += f.b01 ? 0 : 1;
      no_root2 += f.b02 ? 0 : 1;
      if (!f.accepted) continue;
      ++accepted;
      // Truth at the window start.
      const double tw = f.window[0].t;
      const auto truth = closed_form_coefficients({}, s.v0, s.mn, s.l, s.b0);
      const Vec2 v_true = eval_velocity(truth, tw);
      const double ph = s.b0 * tw;
      const Vec2 mn_true{s.mn.x1 * std::cos(ph) + s.mn.x2 * std::sin(ph),
                         s.mn.x2 * std::cos(ph) - s.mn.x1 * std::sin(ph)};
      const double db = std::abs(*f.b0 - s.b0);
      worst_b0 = std::max(worst_b0, db);
      if (db < 1e-8) ++b0_ok;
      if ((*f.v0 - v_true).norm() < 1e-9 * v_true.norm() &&
          (*f.mn - mn_true).norm() < 1e-9 * mn_true.norm())
        ++params_ok;
    }
  }
  const double elapsed = seconds_since(t0);
  const double rate = static_cast<double>(accepted) / static_cast<double>(windows);
  record("5",
         rate >= 0.99 && b0_ok == accepted && params_ok == accepted && elapsed < 30.0,
         fmt("sweep over 100 synthetic tracks (%zu windows): accepted %.1f%% (>= 99%%), b0 within "
             "1e-8 on %zu/%zu accepted (max |db0| = %.2e), v0 and mn within 1e-9 on %zu/%zu; "
             "no root for V1 condition on %zu windows, for V2 on %zu; %.2f s (< 30 s)",
             windows, 100 * rate, b0_ok, accepted, worst_b0, params_ok, accepted, no_root1,
             no_root2, elapsed));
}

// Windows with prescribed roots b01, b02 of the two velocity conditions.
std::vector<std::array<TimedPoint, 3>> constructed_suite(double l) {
  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> b(-5e-5, 5e-5), d(-1e5, 1e5);
  std::vector<std::array<TimedPoint, 3>> out;
  for (int i = 0; i < 100; ++i) {
    const double b01 = b(rng);
    const double b02 = b01 + std::pow(10.0, -7.0 + 2.5 * (i % 10) / 9.0) * (i % 2 ? 1 : -1);
    if (std::abs(b01) < 1e-7 || std::abs(b02) < 1e-7) continue;
    out.push_back(oracle::window_with_roots(l, b01, b02, 6 * kHour, 12 * kHour, {d(rng), d(rng)}));
  }
  return out;
}

void criterion6() {
  const double l = coriolis_parameter(20.0);
  const auto w = oracle::window_with_roots(l, -5e-6, -2.5e-6, 6 * kHour, 12 * kHour, {6e4, 3e4});
  FitConfig strict, loose;
  strict.epsilon = 2e-6;
  loose.epsilon = 3e-6;
  const FitResult a = find_b0(w[0], w[1], w[2], l, strict);
  const FitResult b = find_b0(w[0], w[1], w[2], l, loose);
  const double gap = (a.b01 && a.b02) ? std::abs(*a.b01 - *a.b02) : -1.0;
  const bool flip = !a.accepted && b.accepted && std::abs(gap - 2.5e-6) < 1e-12;

  const auto suite = constructed_suite(l);
  const std::vector<double> eps{1e-7, 5e-7, 1e-6, 2e-6, 3e-6, 5e-6, 1e-5};
  std::size_t violations = 0;
  std::vector<std::size_t> counts(eps.size(), 0);
  for (const auto& win : suite) {
    bool previous = false;
    for (std::size_t k = 0; k < eps.size(); ++k) {
      FitConfig c;
      c.epsilon = eps[k];
      const bool now = find_b0(win[0], win[1], win[2], l, c).accepted;
      counts[k] += now ? 1 : 0;
      if (previous && !now) ++violations;
      previous = now;
    }
  }
  std::string profile;
  for (std::size_t k = 0; k < eps.size(); ++k)
    profile += fmt("%s%.0e:%zu", k ? " " : "", eps[k], counts[k]);
  record("6", flip && violations == 0 && counts.back() > counts.front(),
         fmt("constructed |b01-b02| = %.3e: eps=2e-6 %s, eps=3e-6 %s; %zu constructed windows, "
             "monotonicity violations = %zu, accepted per eps {%s}",
             gap, a.accepted ? "accepted" : "rejected", b.accepted ? "accepted" : "rejected",
             suite.size(), violations, profile.c_str()));
}

void criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  BarotropicState s0;
  s0.A = 1e-9;
  s0.b = -2e-6;
  s0.K = 1.0;
  ModelParams p;
  const CollapseRun calm = collapse_simulation(p, s0);
  p.k = 3e-5;
  const CollapseRun damped = collapse_simulation(p, s0);
  bool tail = true;
  for (const auto& s : damped.series)
    if (s.t >= damped.series.back().t - 86400.0) tail = tail && s.a < 0.0;

  std::size_t zero_rhs = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) {
        BarotropicState s;
        s.A = std::pow(10.0, -12.0 + 6.0 * i / 9.0);
        s.a = (j - 4.5) * 2e-6;
        s.b = (k - 4.5) * 2e-5;
        const auto d = friction_rhs(s, p);
        if (std::sqrt(d.a * d.a + d.b * d.b + d.A * d.A) == 0.0) ++zero_rhs;
      }
  const double elapsed = seconds_since(t0);
  record("7",
         calm.diagnostics.invariant_drift < 1e-6 && damped.diagnostics.invariant_drift > 1e-2 &&
             tail && zero_rhs == 0 && elapsed < 10.0,
         fmt("friction: k=0 invariant drift %.2e (< 1e-6), k=3e-5 drift %.3f (> 1e-2), a<0 over "
             "final day=%s (final a=%.2e), zero RHS on %zu/1000 grid states, %.2f s (< 10 s)",
             calm.diagnostics.invariant_drift, damped.diagnostics.invariant_drift,
             tail ? "yes" : "no", damped.diagnostics.final_a, zero_rhs, elapsed));
}

void criterion8() {
  ModelParams p;
  p.l = coriolis_parameter(22.0);
  const double b0 = -2e-5;
  const double A0 = (b0 * b0 - p.l * b0) / (2 * p.c0);
  BarotropicState rest;
  rest.M = 1e-4;
  rest.N = -5e-5;
  rest.K = 1.0;
  rest.V1 = 3.0;
  rest.V2 = -2.0;
  const BarotropicState tropic0 =
      equilibrium_state((b0 - p.l / 2) * std::pow(A0, -1.0 / p.gamma), p, rest);

  const double A1 = 2 * p.c0 * A0 / (4 * p.R);
  BaroclinicState crest;
  crest.M1 = p.c0 * rest.M / (2 * p.R);
  crest.N1 = p.c0 * rest.N / (2 * p.R);
  crest.K1 = 300.0;
  crest.K2 = 1.0;
  crest.V1 = rest.V1;
  crest.V2 = rest.V2;
  const BaroclinicState clinic0 =
      baroclinic_equilibrium_state((b0 - p.l / 2) * std::pow(A1, -1.0 / p.gamma), p, crest);

  const auto u = simulate_barotropic(tropic0, p);
  const auto v = simulate_baroclinic(clinic0, p);
  double worst = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    scale = std::max(scale, std::hypot(u[i].x1, u[i].x2));
    worst = std::max(worst, std::hypot(u[i].x1 - v[i].x1, u[i].x2 - v[i].x2));
  }
  record("8", worst / scale < 1e-10,
         fmt("matched barotropic/baroclinic equilibrium tracks over 3 days: max rel separation "
             "%.2e (< 1e-10), b0 %.6e vs %.6e",
             worst / scale, tropic0.b, clinic0.b));
}

bool loops(double b0, double hours, double l, Vec2 mn) {
  // Mostly the vortex circle: V close to the pure-circle velocity.
  const Vec2 v0{mn.x2 / (b0 - l) + 0.1, -mn.x1 / (b0 - l)};
  const auto c = closed_form_coefficients({}, v0, mn, l, b0);
  std::vector<Vec2> path;
  for (double t = 0.0; t <= hours * kHour + 1e-9; t += 0.5 * kHour)
    path.push_back(eval_trajectory(c, t));
  return find_self_intersection(path).has_value();
}

void criterion9() {
  const double l = coriolis_parameter(22.0);
  const Vec2 mn{2e-5, 2e-5};
  const bool parma = loops(-6e-5, 144.0, l, mn);
  const bool slow = loops(-2e-6, 72.0, l, mn);
  record("9", parma && !slow,
         fmt("self-intersection: |b0|=6e-5 within 144 h: %s (want yes); |b0|=2e-6 within 72 h: %s "
             "(want no)",
             parma ? "yes" : "no", slow ? "yes" : "no"));
}

void criterion10() {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> lat0(-60.0, 60.0), lon0(-180.0, 180.0);
  std::uniform_real_distribution<double> r(0.0, 2e6), th(0.0, 2 * std::numbers::pi);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const GeoPoint origin{lat0(rng), lon0(rng)};
    const double rr = r(rng), tt = th(rng);
    const GeoPoint g = unproject({rr * std::cos(tt), rr * std::sin(tt)}, origin);
    const GeoPoint back = unproject(project(g, origin), origin);
    worst = std::max({worst, std::abs(back.lat - g.lat),
                      std::abs(std::remainder(back.lon - g.lon, 360.0))});
  }
  const double d = haversine({0.0, 0.0}, {0.0, 1.0});
  record("10", worst < 1e-9 && std::abs(d - 111194.9) <= 1.0,
         fmt("geodesy: round-trip max error %.2e deg (< 1e-9) within 2000 km, haversine 1 deg "
             "= %.2f m (111194.9 +- 1)",
             worst, d));
}

void guarded(const std::string& id, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    record(id, false, std::string("threw: ") + e.what());
  }
}

}  // namespace

int main() {
  guarded("1", criterion1);
  guarded("2", criterion2);
  guarded("3", criterion3);
  guarded("4", criterion4);
  const auto suite = synthetic_suite();
  guarded("5", [&] { criterion5(suite); });
  guarded("6", criterion6);
  guarded("7", criterion7);
  guarded("8", criterion8);
  guarded("9", criterion9);
  guarded("10", criterion10);
  std::printf("%d failing line(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
