#include <benchmark/benchmark.h>

#include "horizon/expression.hpp"

using namespace horizon;

static void JetProduct(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Jet a = Jet::variable(1.3, 0, 4, order);
  const Jet b = Jet::variable(0.7, 2, 4, order);
  Jet f = sin(a) * b + exp(b * 0.25);
  Jet g = (a + b) * (a - b) + 2.0;
  for (auto _ : state) {
    Jet p = f * g;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(JetProduct)->DenseRange(1, 4);

static void KerrComponentJet(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Expression e = Expression::parse(
      "a^2*sin(theta)^4*(1 + 2*m*r/(r^2 + a^2*cos(theta)^2)) + "
      "(r^2 + a^2*cos(theta)^2)*sin(theta)^2",
      {"r", "v", "theta", "phi"}, {"m", "a"});
  const double pt[4] = {1.87, 0.0, 1.1, 2.0};
  const double prm[2] = {1.0, 0.5};
  for (auto _ : state) {
    Jet j = e.eval_jet(std::span<const double>(pt, 4),
                       std::span<const double>(prm, 2), order);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(KerrComponentJet)->DenseRange(0, 4);
