#ifndef AREALM_WALKS_HPP
#define AREALM_WALKS_HPP

#include <complex>
#include <cstdint>

#include "arealm/densities.hpp"
#include "arealm/errors.hpp"

// Monte Carlo oracle over the bidisk/torus: uniform samples and batched
// estimators for the expectations the closed forms predict.

namespace arealm::walks {

using Complex = std::complex<double>;
using densities::FamilyParamK;

struct MCConfig {
  long long samples = 1'000'000;
  std::uint64_t seed = 0;
  long long batch = 10'000;

  void validate() const {
    if (batch < 1 || samples < batch)
      throw DomainError("MCConfig: requires samples >= batch >= 1");
    if (samples % batch != 0)
      throw DomainError("MCConfig: samples must be a multiple of batch");
  }
};

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // from batch means
  long long samples_used = 0;
  long long rejected = 0;  // non-finite draws that were resampled
};

// Splittable counter-seeded stream: stream (seed, id) pairs are independent
// by construction, so batches can run in parallel and still reproduce.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);
  std::uint64_t next_u64();
  double uniform();  // [0, 1)

 private:
  std::uint64_t state_;
};

// Area-uniform point on the unit disk (radius = sqrt(u), NOT u).
Complex sample_disk(RngStream& rng);
// Uniform point on the unit circle.
Complex sample_circle(RngStream& rng);

// E log|X+Y+k| over the bidisk (areal Mahler measure of x+y+k).
MCEstimate mc_areal_mahler_xyk(const FamilyParamK& k, const MCConfig& cfg);

// Areal Mahler measure of (x+1)(y+1)+kz with the z-average eliminated:
// E[ log k + log+|f/k| + (min(|f/k|^2,1) - 1)/2 ],  f = (X+1)(Y+1).
MCEstimate mc_areal_mahler_qk(const FamilyParamK& k, const MCConfig& cfg);

// Naive three-variable estimator E log|(X+1)(Y+1)+kZ| (Z on the circle);
// kept as the variance baseline for the reduced estimator above.
MCEstimate mc_areal_mahler_qk_naive(const FamilyParamK& k, const MCConfig& cfg);

enum class MomentFamily { xyk, qk_f_part };

// E |X+Y+k|^s over the bidisk, or E |(1+X)(1+Y)|^s. Requires s > -2.
MCEstimate mc_moment(double s, const FamilyParamK& k, MomentFamily family,
                     const MCConfig& cfg);

}  // namespace arealm::walks

#endif
