#include <vector>

#include <benchmark/benchmark.h>

#include <tcvortex/barotropic.hpp>
#include <tcvortex/fitting.hpp>
#include <tcvortex/model.hpp>
#include <tcvortex/trajectory.hpp>

using namespace tcvortex;

namespace {

ModelParams lat22() {
  ModelParams p;
  p.l = coriolis_parameter(22.0);
  return p;
}

std::vector<TimedPoint> synthetic_points(int n) {
  const double l = coriolis_parameter(22.0);
  const auto c = closed_form_coefficients({}, {4.0, 2.0}, {3e-6, -4e-6}, l, -5e-6);
  std::vector<TimedPoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back({i * 3 * 3600.0, eval_trajectory(c, i * 3 * 3600.0)});
  return pts;
}

void BM_SimulateThreeDays(benchmark::State& state) {
  const ModelParams p = lat22();
  BarotropicState s;
  s.a = 1e-5;
  s.b = 5e-5;
  s.A = 1e-9;
  s.M = 2e-3;
  s.N = 1e-3;
  s.K = 1.0;
  s.V1 = -1.0;
  s.V2 = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_barotropic(s, p));
}
BENCHMARK(BM_SimulateThreeDays)->Unit(benchmark::kMillisecond);

void BM_EvalTrajectory(benchmark::State& state) {
  const auto c = closed_form_coefficients({}, {4.0, 2.0}, {3e-6, -4e-6}, coriolis_parameter(22.0), -5e-6);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_trajectory(c, t));
    t += 60.0;
  }
}
BENCHMARK(BM_EvalTrajectory);

void BM_LinearFit(benchmark::State& state) {
  const auto pts = synthetic_points(3);
  const double l = coriolis_parameter(22.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_linear_fit(pts[0], pts[1], pts[2], -5e-6, l));
}
BENCHMARK(BM_LinearFit);

void BM_FindB0(benchmark::State& state) {
  const auto pts = synthetic_points(3);
  const double l = coriolis_parameter(22.0);
  for (auto _ : state) benchmark::DoNotOptimize(find_b0(pts[0], pts[1], pts[2], l));
}
BENCHMARK(BM_FindB0)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const auto pts = synthetic_points(static_cast<int>(state.range(0)));
  const double l = coriolis_parameter(22.0);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_points(pts, l));
}
BENCHMARK(BM_Sweep)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
