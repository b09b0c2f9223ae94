#include <benchmark/benchmark.h>

#include "arealm/specfun.hpp"

using namespace arealm::specfun;

static void GammaComplex(benchmark::State& state) {
  Complex z(0.3, 4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma(z));
    z += Complex(1e-12, 1e-12);
  }
}
BENCHMARK(GammaComplex);

static void Gauss2F1NearOne(benchmark::State& state) {
  double m = 0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_2f1(0.5, 0.5, 1.0, m));
    m = (m == 0.9) ? 0.90000001 : 0.9;
  }
}
BENCHMARK(Gauss2F1NearOne);

static void EllipticKAgm(benchmark::State& state) {
  double m = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elliptic_k(m));
    m = (m == 0.5) ? 0.50000001 : 0.5;
  }
}
BENCHMARK(EllipticKAgm);

static void BlochWigner(benchmark::State& state) {
  Complex z(0.5, 0.8660254);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bloch_wigner(z));
  }
}
BENCHMARK(BlochWigner);

static void PfqAtUnity4F3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pfq_at_unity({0.25, 0.25, 0.75, 0.75}, {0.5, 1.25, 1.25}));
  }
}
BENCHMARK(PfqAtUnity4F3);
