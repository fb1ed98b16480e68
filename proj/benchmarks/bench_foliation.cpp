#include <benchmark/benchmark.h>

#include "horizon/expansion.hpp"

using namespace horizon;

static void KerrPullbackExtraction(benchmark::State& state) {
  CatalogParams p;
  p.m = 1.0;
  p.a = 0.5;
  const SpacetimeSolution sol = build("kerr", p);
  const Vec base{0.3, 1.1, 2.0};
  for (auto _ : state) {
    ExpansionRecord rec = pullback_metric_jet(sol, base);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(KerrPullbackExtraction)->Unit(benchmark::kMillisecond);

static void KerrQ1(benchmark::State& state) {
  CatalogParams p;
  p.m = 1.0;
  p.a = 0.5;
  const SpacetimeSolution sol = build("kerr", p);
  const Vec base{0.3, 1.1, 2.0};
  for (auto _ : state) {
    Q1Result r = q1(sol.closed_form_data, base, sol.kappa_closed_form);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(KerrQ1);

BENCHMARK_MAIN();
