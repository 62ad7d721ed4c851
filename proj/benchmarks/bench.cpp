#include "higauge/atiyah.hpp"
#include "higauge/gauge.hpp"
#include "higauge/suites.hpp"

#include <benchmark/benchmark.h>

using namespace higauge;

namespace {

void bm_expm(benchmark::State& state) {
  CrossedModule cm = builtin_crossed_module("conjugation");
  Rng rng(1);
  const Mat a = cm.sample_alg_G(rng);
  for (auto _ : state) benchmark::DoNotOptimize(expm(a));
}
BENCHMARK(bm_expm);

void bm_tensor(benchmark::State& state) {
  CrossedModule cm = builtin_crossed_module("normal_inclusion");
  Rng rng(2);
  const TwoGroupArrow a = sample_arrow(cm, rng);
  const TwoGroupArrow b = sample_arrow(cm, rng);
  for (auto _ : state) benchmark::DoNotOptimize(tensor(cm, a, b));
}
BENCHMARK(bm_tensor);

void bm_adjoint_algebra(benchmark::State& state) {
  CrossedModule cm = builtin_crossed_module("conjugation");
  Rng rng(3);
  const TwoGroupArrow a = sample_arrow(cm, rng);
  const Lie2AlgebraArrow k = sample_l2a_arrow(cm, rng);
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_algebra(cm, a, k));
}
BENCHMARK(bm_adjoint_algebra);

void bm_omega1(benchmark::State& state) {
  const GroupoidBundle bd =
      make_bundle("pair", builtin_crossed_module("conjugation"));
  const ConnectionForm w = base_compatible_connection(bd);
  Rng rng(4);
  const DecArrow a = sample_dec_arrow(bd, rng);
  const DecTangent T = sample_dec_tangent(bd, a, rng);
  for (auto _ : state) benchmark::DoNotOptimize(omega1(bd, w, T));
}
BENCHMARK(bm_omega1);

void bm_fiber_exactness(benchmark::State& state) {
  const GroupoidBundle bd =
      make_bundle("action", builtin_crossed_module("normal_inclusion"));
  Rng rng(5);
  const BaseArrow gamma = bd.base.sample_arrow(rng);
  const Mat J = arrow_j_matrix(bd, gamma);
  const Mat P = arrow_pi_matrix(bd);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_fiber(J, P));
}
BENCHMARK(bm_fiber_exactness);

void bm_gauge_pushforward(benchmark::State& state) {
  const GroupoidBundle bd =
      make_bundle("pair", builtin_crossed_module("conjugation"));
  Rng rng(6);
  const GaugeElement s = sample_gauge(bd, rng);
  const TotalPoint p = bd.sample_point(rng);
  const TotalTangent v = bd.sample_tangent(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_pushforward(bd, s, v));
}
BENCHMARK(bm_gauge_pushforward);

void bm_suite_peiffer(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.trials = 10;
  cfg.suites = {"peiffer"};
  for (auto _ : state) benchmark::DoNotOptimize(run_suites(cfg));
}
BENCHMARK(bm_suite_peiffer);

}  // namespace

BENCHMARK_MAIN();
