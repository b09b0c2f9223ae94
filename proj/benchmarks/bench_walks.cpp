#include <benchmark/benchmark.h>

#include "arealm/walks.hpp"

using namespace arealm::walks;
using arealm::densities::FamilyParamK;

static void McArealQk(benchmark::State& state) {
  MCConfig cfg;
  cfg.samples = state.range(0);
  cfg.batch = 10'000;
  cfg.seed = 42;
  const FamilyParamK k(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_areal_mahler_qk(k, cfg).mean);
  }
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(McArealQk)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
