#include <benchmark/benchmark.h>

#include <cmath>

#include "arealm/densities.hpp"
#include "arealm/quadrature.hpp"

using namespace arealm::quadrature;

static void CoefficientIntegral(benchmark::State& state) {
  QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = 1e-12;
  for (auto _ : state) {
    auto r = integrate([](double t) { return t * t * arealm::densities::f_density(t); },
                       1.0, 4.0, spec);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(CoefficientIntegral);

static void SqrtSingularCascade(benchmark::State& state) {
  QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = 1e-12;
  spec.endpoint_rule = EndpointRule::sqrt_singular;
  const double pi = 3.14159265358979323846;
  for (auto _ : state) {
    auto r = integrate(
        [&](double v) { return 2.0 / (pi * std::sqrt((2.0 - v) * (2.0 + v))); },
        0.0, 2.0, spec);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(SqrtSingularCascade);
