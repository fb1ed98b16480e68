#include <benchmark/benchmark.h>

#include "horizon/catalog.hpp"
#include "horizon/curvature.hpp"

using namespace horizon;

namespace {

SpacetimeSolution kerr() {
  CatalogParams p;
  p.m = 1.0;
  p.a = 0.5;
  return build("kerr", p);
}

}  // namespace

static void KerrChristoffel(benchmark::State& state) {
  const SpacetimeSolution sol = kerr();
  const Vec p{1.87, 0.0, 1.1, 2.0};
  for (auto _ : state) {
    Rank3 g = christoffel(sol.metric, p);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(KerrChristoffel);

static void KerrRiemann(benchmark::State& state) {
  const SpacetimeSolution sol = kerr();
  const Vec p{1.87, 0.0, 1.1, 2.0};
  for (auto _ : state) {
    Rank4 r = riemann(sol.metric, p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(KerrRiemann);

static void KerrRicciResidual(benchmark::State& state) {
  const SpacetimeSolution sol = kerr();
  const Vec p{1.87, 0.0, 1.1, 2.0};
  for (auto _ : state) {
    double r = ricci_residual(sol, p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(KerrRicciResidual);
