#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "arealm/quadrature.hpp"
#include "arealm/specfun.hpp"

using namespace arealm::quadrature;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

QuadratureSpec rule(EndpointRule r, double tol = 1e-12) {
  QuadratureSpec s;
  s.abs_tol = s.rel_tol = tol;
  s.endpoint_rule = r;
  return s;
}
}  // namespace

TEST_CASE("basic integrals") {
  auto res = integrate([](double x) { return x; }, 0.0, 1.0);
  CHECK(res.value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(res.converged);

  // p_S1 normalization: int_0^2 2/(pi sqrt(4-v^2)) dv = 1.
  auto ps1 = integrate([](double v) { return 2.0 / (kPi * std::sqrt((2.0 - v) * (2.0 + v))); },
                       0.0, 2.0, rule(EndpointRule::sqrt_singular));
  CHECK(ps1.value == doctest::Approx(1.0).epsilon(1e-12));

  // int_0^4 t^2 F(t) dt = Gamma(3)^2/Gamma(2)^4 = 4 (log endpoint at 0).
  auto mom = integrate(
      [](double t) {
        return t * t * arealm::specfun::elliptic_k_complement(t * t / 16.0) /
               (kPi * kPi);
      },
      0.0, 4.0, rule(EndpointRule::log_singular));
  CHECK(mom.value == doctest::Approx(4.0).epsilon(1e-11));
}

TEST_CASE("polynomial exactness of the base rule") {
  // Kronrod-15 integrates degree <= 22 exactly; a single-panel call keeps
  // the rule unsplit because the error estimate is already ~0.
  for (int deg : {5, 13, 22}) {
    auto res = integrate([deg](double x) { return std::pow(x, deg); }, 0.0, 1.0);
    CHECK(std::abs(res.value - 1.0 / (deg + 1)) <= 5e-15);
  }
}

TEST_CASE("error estimate bounds the true error on a validation corpus") {
  struct Case {
    std::function<double(double)> f;
    double a, b, exact;
    EndpointRule r;
  };
  const double e = std::exp(1.0);
  std::vector<Case> corpus = {
      {[](double x) { return std::sin(x); }, 0.0, kPi, 2.0, EndpointRule::smooth},
      {[](double x) { return std::exp(x); }, 0.0, 1.0, e - 1.0, EndpointRule::smooth},
      {[](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, kPi / 4.0, EndpointRule::smooth},
      {[](double x) { return x * x * x - 2.0 * x; }, -1.0, 2.0, 0.75, EndpointRule::smooth},
      {[](double x) { return std::cos(10.0 * x); }, 0.0, 1.0, std::sin(10.0) / 10.0, EndpointRule::smooth},
      {[](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 2.0, EndpointRule::sqrt_singular},
      {[](double x) { return std::sqrt(1.0 - x) * x; }, 0.0, 1.0, 4.0 / 15.0, EndpointRule::sqrt_singular},
      {[](double x) { return 1.0 / std::sqrt((1.0 - x) * (1.0 + x)); }, 0.0, 1.0, kPi / 2.0, EndpointRule::sqrt_singular},
      {[](double x) { return std::log(x); }, 0.0, 1.0, -1.0, EndpointRule::log_singular},
      {[](double x) { return x * std::log(x); }, 0.0, 1.0, -0.25, EndpointRule::log_singular},
      {[](double x) { return std::log(1.0 - x) * std::log(x); }, 0.0, 1.0,
       2.0 - kPi * kPi / 6.0, EndpointRule::log_singular},
      {[](double x) { return std::exp(-x); }, 0.0, 3.0,
       1.0 - std::exp(-3.0), EndpointRule::smooth},
      {[](double x) { return 1.0 / (1e-3 + x * x); }, -1.0, 1.0,
       2.0 * std::atan(1.0 / std::sqrt(1e-3)) / std::sqrt(1e-3), EndpointRule::smooth},
      {[](double x) { return std::sqrt(x); }, 0.0, 4.0, 16.0 / 3.0, EndpointRule::sqrt_singular},
      {[](double x) { return std::pow(x, -0.25); }, 0.0, 1.0, 4.0 / 3.0, EndpointRule::sqrt_singular},
      {[](double x) { return std::sqrt(x) * std::log(x); }, 0.0, 1.0, -4.0 / 9.0, EndpointRule::double_exponential},
      {[](double x) { return std::log(x) * std::log(x); }, 0.0, 1.0, 2.0, EndpointRule::log_singular},
      {[](double x) { return std::sin(x) / x; }, 1e-300, 1.0,
       0.946083070367183015, EndpointRule::smooth},
      {[](double x) { return std::cosh(x); }, -1.0, 1.0, 2.0 * std::sinh(1.0), EndpointRule::smooth},
      {[](double x) { return 1.0 / (2.0 + std::cos(x)); }, 0.0, 2.0 * kPi,
       2.0 * kPi / std::sqrt(3.0), EndpointRule::smooth},
      {[](double x) { return std::atan(x); }, 0.0, 1.0,
       kPi / 4.0 - 0.5 * std::log(2.0), EndpointRule::smooth},
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    auto res = integrate(c.f, c.a, c.b, rule(c.r, 1e-11));
    const double true_err = std::abs(res.value - c.exact);
    INFO("corpus case ", i, " value ", res.value, " exact ", c.exact);
    CHECK(res.converged);
    CHECK(true_err <= std::max(res.err_estimate, 5e-14 * std::abs(c.exact) + 1e-15));
    CHECK(res.evaluations > 0);
  }
}

TEST_CASE("non-finite evaluation and unmet tolerance") {
  CHECK_THROWS_AS(
      integrate([](double x) { return 1.0 / (x - 0.5); }, 0.4999999999875, 0.5000000000125),
      arealm::DomainError);

  QuadratureSpec tight;
  tight.abs_tol = tight.rel_tol = 1e-15;
  tight.max_subdivisions = 4;
  auto res = integrate([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.31)); },
                       0.0, 1.0, tight);
  CHECK_FALSE(res.converged);
  CHECK(res.err_estimate > 1e-15);
}

TEST_CASE("2-D integrals") {
  auto unit = integrate_2d([](double, double) { return 1.0; },
                           {0.0, 1.0, 0.0, 1.0});
  CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-13));

  // Dominant-constant torus average: (1/2pi)^2 oint oint log|x+y+3| = log 3.
  auto torus = integrate_2d(
      [](double th1, double th2) {
        const std::complex<double> v =
            std::polar(1.0, th1) + std::polar(1.0, th2) + 3.0;
        return std::log(std::abs(v)) / (4.0 * kPi * kPi);
      },
      {0.0, 2.0 * kPi, 0.0, 2.0 * kPi}, rule(EndpointRule::smooth, 1e-10));
  CHECK(torus.value == doctest::Approx(std::log(3.0)).epsilon(1e-10));

  // (1/pi^2) int int_{D^2} |x+y|^2 dA dA = 1, reduced over the angles to
  // 4 r1 r2 (r1^2 + r2^2) on the radius square.
  auto disk = integrate_2d(
      [](double r1, double r2) { return 4.0 * r1 * r2 * (r1 * r1 + r2 * r2); },
      {0.0, 1.0, 0.0, 1.0});
  CHECK(disk.value == doctest::Approx(1.0).epsilon(1e-12));
}
