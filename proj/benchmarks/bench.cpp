#include <benchmark/benchmark.h>

#include "ttstar/fredholm.hpp"
#include "ttstar/ode.hpp"
#include "ttstar/region.hpp"
#include "ttstar/rh.hpp"
#include "ttstar/stokes.hpp"

using namespace ttstar;

static void bm_char_poly(benchmark::State& state) {
  CaseId cs(static_cast<CaseId::Tag>(state.range(0)));
  StokesParams s(1.3, -0.7, cs);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(s));
}
BENCHMARK(bm_char_poly)->Arg(0)->Arg(1)->Arg(2);

static void bm_circle_jumps(benchmark::State& state) {
  StokesParams s(1.3, -0.7);
  for (auto _ : state) benchmark::DoNotOptimize(verify_circle_jumps(s));
}
BENCHMARK(bm_circle_jumps);

static void bm_region_verdict(benchmark::State& state) {
  StokesParams s(0.7, -1.1);
  for (auto _ : state) benchmark::DoNotOptimize(in_region_b(s));
}
BENCHMARK(bm_region_verdict);

static void bm_phi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(phi(1.0));
}
BENCHMARK(bm_phi);

static void bm_integrate_inward(benchmark::State& state) {
  StokesParams s(0.0, -2.0);
  OdeConfig cfg;
  cfg.x_min = 1e-2;
  for (auto _ : state) benchmark::DoNotOptimize(integrate_inward(s, cfg));
}
BENCHMARK(bm_integrate_inward)->Unit(benchmark::kMillisecond);

static void bm_fredholm_q(benchmark::State& state) {
  TWParams p = params_from_stokes(StokesParams(0.5, -0.5), Branch::I);
  for (auto _ : state)
    benchmark::DoNotOptimize(fredholm_q(1.0, p, state.range(0)));
}
BENCHMARK(bm_fredholm_q)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void bm_solvable_from(benchmark::State& state) {
  StokesParams s(10.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(solvable_from(s));
}
BENCHMARK(bm_solvable_from);

BENCHMARK_MAIN();
