#include <benchmark/benchmark.h>

#include "arealm/zetamahler.hpp"

using namespace arealm::zetamahler;
using arealm::densities::FamilyParamK;

static void ZdXykComplex(benchmark::State& state) {
  const FamilyParamK k(1.0);
  Complex s(-3.5, 20.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zd_xyk(s, k));
    s += Complex(0.0, 1e-9);
  }
}
BENCHMARK(ZdXykComplex);

static void FindZerosSmallBox(benchmark::State& state) {
  const FamilyParamK k(1.0);
  const ZeroBox box{-4.0, -3.0, 5.0, 8.0, 12};
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_zeros(box, k));
  }
}
BENCHMARK(FindZerosSmallBox)->Unit(benchmark::kMillisecond);

static void DerivativeRecovery(benchmark::State& state) {
  const FamilyParamK k(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mahler_from_derivative(ZetaFunction::zd_xyk, k));
  }
}
BENCHMARK(DerivativeRecovery);
