#include <benchmark/benchmark.h>

#include "bohr/problem.hpp"
#include "bohr/series.hpp"
#include "bohr/specfun.hpp"
#include "bohr/verify.hpp"

using namespace bohr;

static void BM_Li2(benchmark::State& state) {
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::li2(x));
    x = x > 0.95 ? 0.05 : x + 0.01;
  }
}
BENCHMARK(BM_Li2);

static void BM_Majorant(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(series::majorant_w0h(r, Alpha(0.5)));
  }
}
BENCHMARK(BM_Majorant)->Arg(300)->Arg(900)->Arg(999);

static void BM_Distance(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(series::distance_w0h(Alpha(a)));
  }
}
BENCHMARK(BM_Distance)->Arg(1)->Arg(250)->Arg(1000);

static void BM_SolveW0H(benchmark::State& state) {
  const RadiusProblem problem{W0H{Alpha(0.5)}, BohrPolynomial({1.0}),
                              MajorantOnly{}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_radius(problem));
  }
}
BENCHMARK(BM_SolveW0H)->Unit(benchmark::kMicrosecond);

static void BM_SolveStableUnivalent(benchmark::State& state) {
  const RadiusProblem problem{StableUnivalent{}, BohrPolynomial({1.0, 1.0}),
                              RatioArea{}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_radius(problem));
  }
}
BENCHMARK(BM_SolveStableUnivalent)->Unit(benchmark::kMicrosecond);

static void BM_Reproduce(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::reproduce_published_values());
  }
}
BENCHMARK(BM_Reproduce)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
