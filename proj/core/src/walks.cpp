#include "arealm/walks.hpp"

#include <cmath>
#include <thread>
#include <vector>

namespace arealm::walks {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) {
  // Scramble (seed, id) into one 64-bit state; distinct ids give streams
  // that are decorrelated by the splitmix output function.
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s = stream_id ^ 0xD1B54A32D192ED03ULL;
  std::uint64_t b = splitmix64(s);
  state_ = a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex sample_disk(RngStream& rng) {
  const double r = std::sqrt(rng.uniform());
  const double th = kTwoPi * rng.uniform();
  return Complex(r * std::cos(th), r * std::sin(th));
}

Complex sample_circle(RngStream& rng) {
  const double th = kTwoPi * rng.uniform();
  return Complex(std::cos(th), std::sin(th));
}

namespace {

// Batched estimator with one RNG stream per batch and a fixed-order
// reduction. `kernel` draws one realization (possibly an antithetic pair
// average) and may reject by returning false.
template <typename Kernel>
MCEstimate run_batches(const MCConfig& cfg, const Kernel& kernel) {
  cfg.validate();
  const long long nbatch = cfg.samples / cfg.batch;
  std::vector<double> batch_mean(static_cast<std::size_t>(nbatch), 0.0);
  std::vector<long long> batch_rejects(static_cast<std::size_t>(nbatch), 0);

  auto run_range = [&](long long lo, long long hi) {
    for (long long bi = lo; bi < hi; ++bi) {
      RngStream rng(cfg.seed, static_cast<std::uint64_t>(bi));
      double acc = 0.0, comp = 0.0;
      long long rejects = 0;
      for (long long i = 0; i < cfg.batch; ++i) {
        double v;
        int guard = 0;
        while (!kernel(rng, v)) {
          ++rejects;
          if (++guard > 1000)
            throw NonConvergence("mc: persistent non-finite draws");
        }
        const double y = v - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
      }
      batch_mean[static_cast<std::size_t>(bi)] = acc / static_cast<double>(cfg.batch);
      batch_rejects[static_cast<std::size_t>(bi)] = rejects;
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const long long nthreads = std::min<long long>(nbatch, hw);
  if (nthreads <= 1) {
    run_range(0, nbatch);
  } else {
    std::vector<std::thread> pool;
    const long long chunk = (nbatch + nthreads - 1) / nthreads;
    for (long long t = 0; t < nthreads; ++t) {
      const long long lo = t * chunk;
      const long long hi = std::min(nbatch, lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  MCEstimate est;
  est.samples_used = cfg.samples;
  double mean = 0.0, comp = 0.0;
  for (double m : batch_mean) {
    const double y = m - comp;
    const double t = mean + y;
    comp = (t - mean) - y;
    mean = t;
  }
  mean /= static_cast<double>(nbatch);
  est.mean = mean;
  double var = 0.0;
  for (double m : batch_mean) var += (m - mean) * (m - mean);
  if (nbatch > 1) {
    var /= static_cast<double>(nbatch - 1);
    est.std_error = std::sqrt(var / static_cast<double>(nbatch));
  }
  for (long long r : batch_rejects) est.rejected += r;
  return est;
}

}  // namespace

MCEstimate mc_areal_mahler_xyk(const FamilyParamK& kk, const MCConfig& cfg) {
  const double k = kk.k;
  return run_batches(cfg, [k](RngStream& rng, double& out) {
    const Complex x = sample_disk(rng);
    const Complex y = sample_disk(rng);
    // Antithetic pair (x,y) -> (-x,-y): same law, anticorrelated integrand.
    const double m1 = std::abs(x + y + k);
    const double m2 = std::abs(-x - y + k);
    if (m1 == 0.0 || m2 == 0.0) return false;
    out = 0.5 * (std::log(m1) + std::log(m2));
    return std::isfinite(out);
  });
}

namespace {

double qk_reduced_integrand(Complex x, Complex y, double k) {
  const double fk = std::abs((x + 1.0) * (y + 1.0)) / k;
  const double logplus = fk > 1.0 ? std::log(fk) : 0.0;
  const double fk2 = std::min(fk * fk, 1.0);
  return std::log(k) + logplus + 0.5 * (fk2 - 1.0);
}

}  // namespace

MCEstimate mc_areal_mahler_qk(const FamilyParamK& kk, const MCConfig& cfg) {
  const double k = kk.k;
  if (!(k > 0.0)) throw DomainError("mc_areal_mahler_qk: requires k > 0");
  return run_batches(cfg, [k](RngStream& rng, double& out) {
    const Complex x = sample_disk(rng);
    const Complex y = sample_disk(rng);
    out = 0.5 * (qk_reduced_integrand(x, y, k) + qk_reduced_integrand(-x, -y, k));
    return std::isfinite(out);
  });
}

MCEstimate mc_areal_mahler_qk_naive(const FamilyParamK& kk, const MCConfig& cfg) {
  const double k = kk.k;
  if (!(k > 0.0)) throw DomainError("mc_areal_mahler_qk_naive: requires k > 0");
  return run_batches(cfg, [k](RngStream& rng, double& out) {
    const Complex x = sample_disk(rng);
    const Complex y = sample_disk(rng);
    const Complex z = sample_circle(rng);
    const double m1 = std::abs((x + 1.0) * (y + 1.0) + k * z);
    const double m2 = std::abs((1.0 - x) * (1.0 - y) + k * z);
    if (m1 == 0.0 || m2 == 0.0) return false;
    out = 0.5 * (std::log(m1) + std::log(m2));
    return std::isfinite(out);
  });
}

MCEstimate mc_moment(double s, const FamilyParamK& kk, MomentFamily family,
                     const MCConfig& cfg) {
  if (!(s > -2.0)) throw DomainError("mc_moment: requires s > -2");
  const double k = kk.k;
  if (family == MomentFamily::xyk) {
    return run_batches(cfg, [k, s](RngStream& rng, double& out) {
      const Complex x = sample_disk(rng);
      const Complex y = sample_disk(rng);
      const double m1 = std::abs(x + y + k);
      const double m2 = std::abs(-x - y + k);
      if ((m1 == 0.0 || m2 == 0.0) && s < 0.0) return false;
      out = 0.5 * (std::pow(m1, s) + std::pow(m2, s));
      return std::isfinite(out);
    });
  }
  return run_batches(cfg, [s](RngStream& rng, double& out) {
    const Complex x = sample_disk(rng);
    const Complex y = sample_disk(rng);
    const double m1 = std::abs((1.0 + x) * (1.0 + y));
    const double m2 = std::abs((1.0 - x) * (1.0 - y));
    if ((m1 == 0.0 || m2 == 0.0) && s < 0.0) return false;
    out = 0.5 * (std::pow(m1, s) + std::pow(m2, s));
    return std::isfinite(out);
  });
}

}  // namespace arealm::walks
