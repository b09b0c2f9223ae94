#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "arealm/mahler.hpp"
#include "arealm/walks.hpp"

using namespace arealm::walks;
using arealm::densities::FamilyParamK;

namespace {
MCConfig cfg(long long samples, std::uint64_t seed = 42,
             long long batch = 10'000) {
  MCConfig c;
  c.samples = samples;
  c.seed = seed;
  c.batch = batch;
  return c;
}
}  // namespace

TEST_CASE("sampler laws") {
  RngStream rng(7, 0);
  double sum_r2 = 0.0, sum_re = 0.0, sum_im = 0.0;
  const int n = 200'000;
  for (int i = 0; i < n; ++i) {
    const Complex z = sample_disk(rng);
    sum_r2 += std::norm(z);
    sum_re += z.real();
    sum_im += z.imag();
  }
  // E|X|^2 = int_0^1 r^2 2r dr = 1/2 under the area measure; the 3-sigma
  // band for |X|^2 (variance 1/12) at n samples.
  const double se = std::sqrt(1.0 / 12.0 / n);
  CHECK(std::abs(sum_r2 / n - 0.5) <= 3.0 * se);
  // Rotational symmetry: mean 0, component variance 1/4.
  const double se_comp = std::sqrt(0.25 / n);
  CHECK(std::abs(sum_re / n) <= 3.0 * se_comp);
  CHECK(std::abs(sum_im / n) <= 3.0 * se_comp);

  // Circle samples have |X|^2 = 1 exactly.
  RngStream rng2(7, 1);
  for (int i = 0; i < 100; ++i) {
    CHECK(std::abs(std::norm(sample_circle(rng2)) - 1.0) <= 1e-14);
  }
}

TEST_CASE("bit-exact reproducibility") {
  const auto a = mc_areal_mahler_xyk(FamilyParamK(1.0), cfg(200'000));
  const auto b = mc_areal_mahler_xyk(FamilyParamK(1.0), cfg(200'000));
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.samples_used == 200'000);

  const auto c = mc_areal_mahler_xyk(FamilyParamK(1.0), cfg(200'000, 43));
  CHECK(a.mean != c.mean);
}

TEST_CASE("std_error scales like 1/sqrt(samples)") {
  const auto small = mc_areal_mahler_qk_naive(FamilyParamK(1.0), cfg(100'000, 42, 1000));
  const auto big = mc_areal_mahler_qk_naive(FamilyParamK(1.0), cfg(400'000, 42, 1000));
  const double ratio = big.std_error / small.std_error;
  CHECK(ratio >= 0.4);
  CHECK(ratio <= 0.6);
}

TEST_CASE("areal Mahler estimators against closed forms") {
  const auto k5 = mc_areal_mahler_xyk(FamilyParamK(5.0), cfg(1'000'000));
  CHECK(std::abs(k5.mean - std::log(5.0)) <= 4.0 * k5.std_error);

  const auto k0 = mc_areal_mahler_xyk(FamilyParamK(0.0), cfg(1'000'000));
  CHECK(std::abs(k0.mean + 0.25) <= 4.0 * k0.std_error);

  const double md1 = arealm::mahler::md_xyk(FamilyParamK(1.0)).value;
  const auto k1 = mc_areal_mahler_xyk(FamilyParamK(1.0), cfg(1'000'000));
  CHECK(std::abs(k1.mean - md1) <= 4.0 * k1.std_error);

  const auto q5 = mc_areal_mahler_qk(FamilyParamK(5.0), cfg(1'000'000));
  CHECK(std::abs(q5.mean - (9.0 / 200.0 - 0.5 + std::log(5.0))) <=
        4.0 * q5.std_error);

  const auto q1 = mc_areal_mahler_qk(FamilyParamK(1.0), cfg(1'000'000));
  CHECK(std::abs(q1.mean - 0.181650509823419975804) <= 4.0 * q1.std_error);

  // The z-averaged estimator beats the naive three-variable one.
  const auto naive = mc_areal_mahler_qk_naive(FamilyParamK(1.0), cfg(1'000'000));
  CHECK(q1.std_error < naive.std_error);
}

TEST_CASE("moment estimators") {
  const auto m0 = mc_moment(2.0, FamilyParamK(0.0), MomentFamily::xyk, cfg(1'000'000));
  CHECK(std::abs(m0.mean - 1.0) <= 4.0 * m0.std_error);

  const auto mq = mc_moment(2.0, FamilyParamK(1.0), MomentFamily::qk_f_part,
                            cfg(1'000'000));
  CHECK(std::abs(mq.mean - 2.25) <= 4.0 * mq.std_error);

  // s = 0 gives exactly 1 for every sample.
  const auto unit = mc_moment(0.0, FamilyParamK(2.0), MomentFamily::xyk, cfg(10'000));
  CHECK(unit.mean == 1.0);
  CHECK(unit.std_error == 0.0);

  CHECK_THROWS_AS(mc_moment(-2.5, FamilyParamK(1.0), MomentFamily::xyk, cfg(100)),
                  arealm::DomainError);
}

TEST_CASE("config validation") {
  MCConfig bad;
  bad.samples = 10;
  bad.batch = 20;
  CHECK_THROWS_AS(bad.validate(), arealm::DomainError);
  MCConfig nondiv;
  nondiv.samples = 15;
  nondiv.batch = 10;
  CHECK_THROWS_AS(nondiv.validate(), arealm::DomainError);
}
