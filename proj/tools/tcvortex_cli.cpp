// tcvortex command-line front end.
//
// Exit codes: 0 success (a rejected fit is still a success), 1 input error,
// 2 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <tcvortex/baroclinic.hpp>
#include <tcvortex/barotropic.hpp>
#include <tcvortex/errors.hpp>
#include <tcvortex/fit_json.hpp>
#include <tcvortex/fitting.hpp>
#include <tcvortex/friction.hpp>
#include <tcvortex/geo.hpp>
#include <tcvortex/phase.hpp>
#include <tcvortex/track.hpp>
#include <tcvortex/trajectory.hpp>

namespace {

using namespace tcvortex;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void require_finite(double v, const std::string& name) {
  require(std::isfinite(v), name + " must be finite");
}

// Writes to `path`, or to stdout for "" and "-".
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  write_text_file(path, content);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// --- model parameters shared by simulate and phase -------------------------

struct ParamFlags {
  double gamma = ModelParams{}.gamma;
  std::optional<double> l;
  std::optional<double> lat;
  double c0 = ModelParams{}.c0;
  double R = ModelParams{}.R;
  double mu = 0.0;
  double lambda = 0.0;
  double kappa = 0.0;
  double xi = 0.0;
  double k = 0.0;

  void add_to(CLI::App& app) {
    app.add_option("--gamma", gamma, "two-dimensional adiabatic exponent");
    auto* lopt = app.add_option("--l", l, "Coriolis parameter, s^-1 (default 1e-4)");
    app.add_option("--lat", lat, "latitude for the Coriolis parameter, deg")->excludes(lopt);
    app.add_option("--c0", c0, "barotropic pressure constant");
    app.add_option("--R", R, "gas constant");
    app.add_option("--mu", mu, "viscosity mu");
    app.add_option("--lambda", lambda, "viscosity lambda");
    app.add_option("--kappa", kappa, "heat conduction");
    app.add_option("--xi", xi, "heat source");
    app.add_option("--k", k, "surface friction, s^-1");
  }

  ModelParams build() const {
    ModelParams p;
    p.gamma = gamma;
    p.c0 = c0;
    p.R = R;
    p.mu = mu;
    p.lambda = lambda;
    p.kappa = kappa;
    p.xi = xi;
    p.k = k;
    if (l) p.l = *l;
    if (lat) {
      require_finite(*lat, "--lat");
      p.l = coriolis_parameter(*lat);
    }
    p.validate();
    return p;
  }
};

double field(const json& j, const char* key) {
  if (!j.contains(key)) return 0.0;
  if (!j.at(key).is_number()) throw InputError(std::string("state field ") + key + " is not a number");
  return j.at(key).get<double>();
}

BarotropicState barotropic_from_json(const json& j) {
  BarotropicState s;
  s.a = field(j, "a");
  s.b = field(j, "b");
  s.A = field(j, "A");
  s.M = field(j, "M");
  s.N = field(j, "N");
  s.K = field(j, "K");
  s.V1 = field(j, "V1");
  s.V2 = field(j, "V2");
  s.x1 = field(j, "x1");
  s.x2 = field(j, "x2");
  for (double v : s.to_vector()) require_finite(v, "state");
  return s;
}

BaroclinicState baroclinic_from_json(const json& j) {
  BaroclinicState s;
  s.a = field(j, "a");
  s.b = field(j, "b");
  s.A1 = field(j, "A1");
  s.M1 = field(j, "M1");
  s.N1 = field(j, "N1");
  s.K1 = field(j, "K1");
  s.K2 = field(j, "K2");
  s.V1 = field(j, "V1");
  s.V2 = field(j, "V2");
  s.x1 = field(j, "x1");
  s.x2 = field(j, "x2");
  for (double v : s.to_vector()) require_finite(v, "state");
  return s;
}

std::string barotropic_csv(const std::vector<BarotropicState>& series) {
  std::string out = "t_hours,a,b,A,M,N,K,V1,V2,x1_km,x2_km\n";
  for (const auto& s : series)
    out += fmt::format("{:.6f},{:.9e},{:.9e},{:.9e},{:.9e},{:.9e},{:.9e},{:.9e},{:.9e},{:.6f},{:.6f}\n",
                       s.t / kSecondsPerHour, s.a, s.b, s.A, s.M, s.N, s.K, s.V1, s.V2,
                       s.x1 / 1000.0, s.x2 / 1000.0);
  return out;
}

std::string baroclinic_csv(const std::vector<BaroclinicState>& series) {
  std::string out = "t_hours,a,b,A1,M1,N1,K1,K2,V1,V2,x1_km,x2_km\n";
  for (const auto& s : series)
    out += fmt::format(
        "{:.6f},{:.9e},{:.9e},{:.9e},{:.9e},{:.9e},{:.9e},{:.9e},{:.9e},{:.9e},{:.6f},{:.6f}\n",
        s.t / kSecondsPerHour, s.a, s.b, s.A1, s.M1, s.N1, s.K1, s.K2, s.V1, s.V2, s.x1 / 1000.0,
        s.x2 / 1000.0);
  return out;
}

// --- simulate ----------------------------------------------------------------

struct SimulateArgs {
  std::string model = "barotropic";
  std::string state_path;
  ParamFlags params;
  double dt = kDefaultTimeStep;
  double days = 3.0;
  std::string out;
};

int run_simulate(const SimulateArgs& a) {
  const ModelParams p = a.params.build();
  require(std::isfinite(a.dt) && a.dt > 0.0, "--dt must be positive");
  require(std::isfinite(a.days) && a.days >= 0.0, "--days must be non-negative");
  const json state = read_json_file(a.state_path);
  const double duration = a.days * kSecondsPerDay;

  if (a.model == "baroclinic") {
    const BaroclinicState s0 = baroclinic_from_json(state);
    const auto series = simulate_baroclinic(s0, p, a.dt, duration);
    emit(a.out, baroclinic_csv(series));
    const double c1 = baroclinic_constants(s0, p).c1;
    double worst = 0.0;
    for (const auto& s : series)
      worst = std::max(worst, std::abs(baroclinic_relation_residual(s, p, c1)));
    std::cerr << fmt::format("rows={} vorticity_relation_residual={:.3e}\n", series.size(), worst);
    return kExitOk;
  }

  const BarotropicState s0 = barotropic_from_json(state);
  if (a.model == "friction") {
    const CollapseRun run = collapse_simulation(p, s0, a.dt, duration);
    emit(a.out, barotropic_csv(run.series));
    const CollapseDiagnostics& d = run.diagnostics;
    std::cerr << fmt::format(
        "rows={} invariant_drift={:.3e} invariant_conserved={} min_a={:.3e} max_abs_b={:.3e} "
        "final_A={:.3e} final_a={:.3e} final_b={:.3e} convergent_tail_hours={:.2f} collapsed={}\n",
        run.series.size(), d.invariant_drift, d.invariant_drift <= 1e-6, d.min_a, d.max_abs_b,
        d.final_A, d.final_a, d.final_b, d.convergent_tail / kSecondsPerHour, d.collapsed);
    return kExitOk;
  }

  const auto series = simulate_barotropic(s0, p, a.dt, duration);
  emit(a.out, barotropic_csv(series));
  const ConstantsDrift d = constants_drift(series, p);
  std::cerr << fmt::format("rows={} c1_drift={:.3e} c3_drift={:.3e} c4_drift={:.3e}\n",
                           series.size(), d.c1, d.c3, d.c4);
  return kExitOk;
}

// --- trajectory --------------------------------------------------------------

struct TrajectoryArgs {
  double lat = 22.0;
  double lon = 0.0;
  double b0 = 0.0;
  std::vector<double> v0{0.0, 0.0};
  std::vector<double> mn{0.0, 0.0};
  double hours = 144.0;
  double step = 1.0;
  std::string out;
  std::string decomposition;
};

json circle_json(const CircleComponent& c) {
  return {{"radius_m", c.radius},
          {"angular_frequency", c.angular_frequency},
          {"period_hours", c.period / kSecondsPerHour},
          {"initial_phase", c.initial_phase}};
}

int run_trajectory(const TrajectoryArgs& a) {
  require_finite(a.lat, "--lat");
  require_finite(a.lon, "--lon");
  require(std::abs(a.lat) <= 90.0, "--lat must lie in [-90, 90]");
  require_finite(a.b0, "--b0");
  for (double v : a.v0) require_finite(v, "--v0");
  for (double v : a.mn) require_finite(v, "--mn");
  require(std::isfinite(a.hours) && a.hours >= 0.0, "--hours must be non-negative");
  require(std::isfinite(a.step) && a.step > 0.0, "--step must be positive");

  const double l = coriolis_parameter(a.lat);
  const TrajectoryCoefficients c =
      closed_form_coefficients({0.0, 0.0}, {a.v0[0], a.v0[1]}, {a.mn[0], a.mn[1]}, l, a.b0);
  const GeoPoint origin{a.lat, normalize_longitude(a.lon)};

  Track track;
  const double horizon = a.hours * kSecondsPerHour;
  const double step = a.step * kSecondsPerHour;
  const auto n = static_cast<std::size_t>(std::ceil(horizon / step - 1e-9));
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = (i == n) ? horizon : static_cast<double>(i) * step;
    const GeoPoint g = unproject(eval_trajectory(c, t), origin);
    track.points.push_back({t, g.lat, g.lon, {}});
  }
  track.validate();

  const TrajectoryDecomposition d = decompose(c);
  const json doc = {{"l", l},
                    {"b0", a.b0},
                    {"center_m", {d.center.x1, d.center.x2}},
                    {"inertial", circle_json(d.inertial)},
                    {"vortex", circle_json(d.vortex)}};
  emit(a.out, write_track(track));
  if (!a.decomposition.empty())
    emit(a.decomposition, doc.dump(2) + "\n");
  else
    std::cerr << doc.dump(2) << "\n";
  return kExitOk;
}

// --- fitting commands ----------------------------------------------------------

struct FitFlags {
  std::string track_path;
  std::size_t window = 0;
  double epsilon = FitConfig{}.epsilon;
  double bound = FitConfig{}.bound;
  std::optional<double> b0;

  void add_to(CLI::App& app, bool with_window) {
    app.add_option("--track", track_path, "track CSV (t_hours,lat_deg,lon_deg[,label])")->required();
    if (with_window) {
      app.add_option("--window", window, "index of the first window point");
      app.add_option("--b0", b0, "fit at this b0 instead of searching, s^-1");
    }
    app.add_option("--epsilon", epsilon, "acceptance threshold on |b01 - b02|, s^-1");
    app.add_option("--bound", bound, "search bound on |b0|, s^-1");
  }

  FitConfig config() const {
    FitConfig c;
    c.epsilon = epsilon;
    c.bound = bound;
    c.validate();
    if (b0) require_finite(*b0, "--b0");
    return c;
  }
};

FitResult fit_from_flags(const FitFlags& f, const FitConfig& config, const Track& track) {
  require(track.points.size() >= 3 && f.window + 3 <= track.points.size(),
          fmt::format("--window {} needs three points; track has {}", f.window,
                      track.points.size()));
  return fit_track_window(track, f.window, config, f.b0);
}

int run_fit(const FitFlags& f, const std::string& out) {
  const FitConfig config = f.config();
  const Track track = read_track_file(f.track_path);
  const FitResult fit = fit_from_flags(f, config, track);
  emit(out, write_fit_result(fit));
  std::cerr << (fit.accepted ? "accepted\n" : "rejected\n");
  return kExitOk;
}

struct ForecastArgs {
  FitFlags fit;
  std::string fit_path;
  double hours = 72.0;
  double step = 3.0;
  std::string out;
};

int run_forecast(ForecastArgs& a) {
  require(std::isfinite(a.hours) && a.hours >= 0.0, "--hours must be non-negative");
  require(std::isfinite(a.step) && a.step > 0.0, "--step must be positive");
  FitResult fit;
  if (!a.fit_path.empty()) {
    fit = fit_result_from_json(read_json_file(a.fit_path));
  } else {
    require(!a.fit.track_path.empty(), "forecast needs --track or --fit");
    const FitConfig config = a.fit.config();
    fit = fit_from_flags(a.fit, config, read_track_file(a.fit.track_path));
  }
  if (!fit.accepted) throw InputError("window rejected; no forecast");
  const Track track = forecast_track(fit, a.hours * kSecondsPerHour, a.step * kSecondsPerHour);
  emit(a.out, write_track(track));
  return kExitOk;
}

int run_sweep(const FitFlags& f, const std::string& out) {
  const FitConfig config = f.config();
  const Track track = read_track_file(f.track_path);
  const std::vector<FitResult> fits = sweep_track(track, config);
  emit(out, write_fit_results(fits));
  std::size_t accepted = 0;
  for (const auto& r : fits) accepted += r.accepted ? 1 : 0;
  std::cerr << fmt::format("windows={} accepted={}\n", fits.size(), accepted);
  return kExitOk;
}

int run_evaluate(const std::string& forecast_path, const std::string& actual_path,
                 const std::string& out) {
  const Track forecast = read_track_file(forecast_path);
  const Track actual = read_track_file(actual_path);
  const ErrorTable table = evaluate_forecast(forecast, actual);
  emit(out, write_error_table(table));
  std::cerr << fmt::format("rows={} mean_km={:.6f} max_km={:.6f}\n", table.rows.size(),
                           table.mean / 1000.0, table.max / 1000.0);
  return kExitOk;
}

// --- phase -----------------------------------------------------------------------

struct PhaseArgs {
  ParamFlags params;
  std::string state_path;
  int count = 5;
  double spread = 0.5;
  double dt = kDefaultTimeStep;
  double days = 10.0;
  std::string out;
};

int run_phase(const PhaseArgs& a) {
  const ModelParams p = a.params.build();
  require(a.count >= 1, "--count must be positive");
  require(std::isfinite(a.spread) && a.spread > -1.0, "--spread must exceed -1");
  require(std::isfinite(a.dt) && a.dt > 0.0, "--dt must be positive");
  require(std::isfinite(a.days) && a.days > 0.0, "--days must be positive");

  BarotropicState base;
  if (!a.state_path.empty()) {
    base = barotropic_from_json(read_json_file(a.state_path));
  } else {
    base.A = 1e-9;
    base.b = -2e-6;
  }
  const auto starts = phase_initial_states(base, p, a.count, a.spread);
  const bool stop = p.k == 0.0;

  std::string csv = "orbit,t_hours,A,a\n";
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const PhaseOrbit orbit = trace_orbit(starts[i], p, a.dt, a.days * kSecondsPerDay, stop);
    for (const auto& s : orbit.states)
      csv += fmt::format("{},{:.6f},{:.9e},{:.9e}\n", i, s.t / kSecondsPerHour, s.A, s.a);
    std::cerr << fmt::format("orbit={} period_hours={:.4f} closed={} closure_error={:.3e}\n", i,
                             orbit.period / kSecondsPerHour, orbit.closed, orbit.closure_error);
  }
  emit(a.out, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical-cyclone vortex model: simulation, trajectory fitting and forecasts"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "integrate the coefficient system");
  simulate->add_option("--model", sim.model, "barotropic | baroclinic | friction")
      ->check(CLI::IsMember({"barotropic", "baroclinic", "friction"}));
  simulate->add_option("--state", sim.state_path, "initial state JSON")->required();
  sim.params.add_to(*simulate);
  simulate->add_option("--dt", sim.dt, "time step, s");
  simulate->add_option("--days", sim.days, "duration, days");
  simulate->add_option("--out", sim.out, "state CSV (default stdout)");

  TrajectoryArgs traj;
  auto* trajectory = app.add_subcommand("trajectory", "closed-form equilibrium trajectory");
  trajectory->add_option("--lat", traj.lat, "origin latitude, deg");
  trajectory->add_option("--lon", traj.lon, "origin longitude, deg");
  trajectory->add_option("--b0", traj.b0, "equilibrium vorticity, s^-1")->required();
  trajectory->add_option("--v0", traj.v0, "initial eye velocity V1 V2, m/s")->expected(2);
  trajectory->add_option("--mn", traj.mn, "initial forcing c0*M c0*N, m/s^2")->expected(2);
  trajectory->add_option("--hours", traj.hours, "duration, h");
  trajectory->add_option("--step", traj.step, "output step, h");
  trajectory->add_option("--out", traj.out, "track CSV (default stdout)");
  trajectory->add_option("--decomposition", traj.decomposition,
                         "two-circle decomposition JSON (default stderr)");

  FitFlags fit_flags;
  std::string fit_out;
  auto* fit = app.add_subcommand("fit", "three-point fit on one window of a track");
  fit_flags.add_to(*fit, true);
  fit->add_option("--out", fit_out, "fit JSON (default stdout)");

  ForecastArgs fc;
  auto* forecast = app.add_subcommand("forecast", "closed-form forecast from a fitted window");
  forecast->add_option("--track", fc.fit.track_path, "track CSV");
  forecast->add_option("--window", fc.fit.window, "index of the first window point");
  forecast->add_option("--b0", fc.fit.b0, "fit at this b0 instead of searching, s^-1");
  forecast->add_option("--epsilon", fc.fit.epsilon, "acceptance threshold, s^-1");
  forecast->add_option("--bound", fc.fit.bound, "search bound on |b0|, s^-1");
  forecast->add_option("--fit", fc.fit_path, "fit JSON produced by `fit` (instead of --track)");
  forecast->add_option("--hours", fc.hours, "horizon, h");
  forecast->add_option("--step", fc.step, "output step, h");
  forecast->add_option("--out", fc.out, "track CSV (default stdout)");

  FitFlags sweep_flags;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "fit every three-point window of a track");
  sweep_flags.add_to(*sweep, false);
  sweep->add_option("--out", sweep_out, "JSON array (default stdout)");

  std::string eval_forecast, eval_actual, eval_out;
  auto* evaluate = app.add_subcommand("evaluate", "great-circle error of a forecast");
  evaluate->add_option("--forecast", eval_forecast, "forecast track CSV")->required();
  evaluate->add_option("--actual", eval_actual, "actual track CSV")->required();
  evaluate->add_option("--out", eval_out, "lead_hours,error_km CSV (default stdout)");

  PhaseArgs ph;
  auto* phase = app.add_subcommand("phase", "orbits of the reduced (A, a) system");
  ph.params.add_to(*phase);
  phase->add_option("--state", ph.state_path, "base state JSON (default A=1e-9, b=-2e-6)");
  phase->add_option("--count", ph.count, "number of orbits");
  phase->add_option("--spread", ph.spread, "largest relative offset of A from A0");
  phase->add_option("--dt", ph.dt, "time step, s");
  phase->add_option("--days", ph.days, "longest orbit duration, days");
  phase->add_option("--out", ph.out, "orbit CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (simulate->parsed()) return run_simulate(sim);
    if (trajectory->parsed()) return run_trajectory(traj);
    if (fit->parsed()) return run_fit(fit_flags, fit_out);
    if (forecast->parsed()) return run_forecast(fc);
    if (sweep->parsed()) return run_sweep(sweep_flags, sweep_out);
    if (evaluate->parsed()) return run_evaluate(eval_forecast, eval_actual, eval_out);
    if (phase->parsed()) return run_phase(ph);
  } catch (const IntegrationBlowup& e) {
    std::cerr << "error: " << e.what() << "\n"
              << fmt::format("last valid time: {:.6f} h\n", e.last_valid_time() / kSecondsPerHour);
    return kExitNumeric;
  } catch (const NoEquilibrium& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const DegenerateWindow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
