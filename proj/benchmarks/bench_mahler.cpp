#include <benchmark/benchmark.h>

#include "arealm/mahler.hpp"

using namespace arealm::mahler;
using arealm::densities::FamilyParamK;

static void MdQkThm12(benchmark::State& state) {
  double k = 1.0;
  for (auto _ : state) {
    // jitter k so the coefficient-integral cache misses (uncached cost)
    k += 1e-9;
    benchmark::DoNotOptimize(md_qk(FamilyParamK(k), MdQkRoute::thm12).value);
  }
}
BENCHMARK(MdQkThm12)->Unit(benchmark::kMillisecond);

static void MdXykRoutes(benchmark::State& state) {
  const FamilyParamK k(1.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(md_xyk(k, MdXykRoute::hyp3f2).value);
    benchmark::DoNotOptimize(md_xyk(k, MdXykRoute::dilog).value);
  }
}
BENCHMARK(MdXykRoutes);

static void PritskerDegree8(benchmark::State& state) {
  const UniPoly p({0.3, -0.7, {0.2, 0.4}, 1.1, -0.5, 0.8, {0.0, -0.3}, 0.6, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pritsker_areal(p).value);
  }
}
BENCHMARK(PritskerDegree8);
