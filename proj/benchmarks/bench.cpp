#include "tfrac/fode.hpp"
#include "tfrac/frac_ops.hpp"
#include "tfrac/norms.hpp"
#include "tfrac/special.hpp"
#include "tfrac/testfns.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace tfrac;

static void BM_frac_integral(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const GridFn v = GridFn::sample(TimeGrid(1.0, N), bump01);
    for (auto _ : state) benchmark::DoNotOptimize(frac_integral_left(v, 0.5));
    state.SetComplexityN(N);
}
BENCHMARK(BM_frac_integral)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_l1_deriv(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const GridFn v = GridFn::sample(TimeGrid(1.0, N), bump01);
    for (auto _ : state) benchmark::DoNotOptimize(frac_deriv_left(v, 0.75));
    state.SetComplexityN(N);
}
BENCHMARK(BM_l1_deriv)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_l1_solve(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    ModeProblem p;
    p.alpha = 0.75;
    p.lambda = M_PI * M_PI;
    p.y0 = 1.0;
    p.g = GridFn::sample(TimeGrid(1.0, N), [](double t) { return std::exp(-t); });
    p.g0 = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(solve_l1(p));
    state.SetComplexityN(N);
}
BENCHMARK(BM_l1_solve)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_ml_oracle_solve(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    ModeProblem p;
    p.alpha = 0.75;
    p.lambda = M_PI * M_PI;
    p.y0 = 1.0;
    p.g = GridFn::sample(TimeGrid(1.0, N), [](double t) { return std::exp(-t); });
    p.g0 = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(solve_ml_oracle(p));
    state.SetComplexityN(N);
}
BENCHMARK(BM_ml_oracle_solve)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

static void BM_ml_series(benchmark::State& state) {
    const MLParams p(0.75, 1.0);
    double z = -3.0;
    for (auto _ : state) benchmark::DoNotOptimize(ml_series(p, z));
}
BENCHMARK(BM_ml_series);

static void BM_ml_integral(benchmark::State& state) {
    const MLParams p(0.75, 1.0);
    double z = -50.0;
    for (auto _ : state) benchmark::DoNotOptimize(ml_integral(p, z));
}
BENCHMARK(BM_ml_integral);

static void BM_seminorm_fourier(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const GridFn v = GridFn::sample(TimeGrid(1.0, N), bump01);
    for (auto _ : state) benchmark::DoNotOptimize(hbeta_seminorm_fourier(v, 0.375));
}
BENCHMARK(BM_seminorm_fourier)->RangeMultiplier(4)->Range(1024, 16384);

static void BM_slobodeckij(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const GridFn v = GridFn::sample(TimeGrid(1.0, N), bump01);
    for (auto _ : state) benchmark::DoNotOptimize(slobodeckij_seminorm(v, 0.375));
    state.SetComplexityN(N);
}
BENCHMARK(BM_slobodeckij)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

BENCHMARK_MAIN();
