#include "arealm/densities.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "arealm/quadrature.hpp"
#include "arealm/specfun.hpp"

namespace arealm::densities {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kPi2 = kPi * kPi;
}  // namespace

double p_t1(double v) {
  if (!(v >= 0.0) || v > 2.0) throw DomainError("p_t1: requires v in [0,2]");
  return v / kPi * (2.0 * kPi - v * std::sqrt(4.0 - v * v) - 4.0 * std::asin(0.5 * v));
}

double p_s1(double v) {
  if (!(v >= 0.0) || v >= 2.0) throw DomainError("p_s1: requires v in [0,2)");
  // 4 - v^2 in the factored form keeps full accuracy down to the last
  // representable point before v = 2 (2 - v is an exact subtraction there).
  return 2.0 / (kPi * std::sqrt((2.0 - v) * (2.0 + v)));
}

double p_cond(double u, double v, const FamilyParamK& kk) {
  const double k = kk.k;
  if (!(v >= 0.0) || v > 2.0) throw DomainError("p_cond: requires v in [0,2]");
  const double lo = std::abs(k - v), hi = k + v;
  if (!(u > lo) || !(u < hi)) {
    throw DomainError("p_cond: requires |k-v| < u < k+v");
  }
  // 4k^2v^2 - (u^2-v^2-k^2)^2 = (u-lo)(u+lo)(hi-u)(hi+u)
  const double rad = (u - lo) * (u + lo) * (hi - u) * (hi + u);
  return 2.0 * u / (kPi * std::sqrt(rad));
}

double f_density(double t) {
  if (!(t > 0.0) || t > 4.0) throw DomainError("f_density: requires t in (0,4]");
  // Pass the complement t^2/16 so tiny t keeps full precision in the AGM.
  return specfun::elliptic_k_complement(t * t / 16.0) / kPi2;
}

double g_density(double t) {
  if (!(t >= 0.0) || t > 4.0) throw DomainError("g_density: requires t in [0,4]");
  return specfun::elliptic_e_complement(t * t / 16.0) / kPi2;
}

double integrate_f_weighted_from_zero(const std::function<double(double)>& g,
                                      double b, double tol) {
  if (!(b > 0.0) || b > 4.0)
    throw DomainError("integrate_f_weighted_from_zero: requires b in (0,4]");
  quadrature::QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = tol;
  // t = 4 e^{-w}: the K(m) log divergence at t=0 becomes a linear factor in w,
  // truncated where the e^{-w} Jacobian has damped it below the tolerance.
  const double w_lo = std::log(4.0 / b);
  const double w_hi = std::max(w_lo + 5.0, 45.0);
  auto integrand = [&](double w) {
    const double t = 4.0 * std::exp(-w);
    return g(t) * f_density(t) * t;
  };
  return quadrature::integrate(integrand, w_lo, w_hi, spec).value;
}

namespace {

struct CoeffKey {
  int n;
  bool primed;
  bool log_weight;
  double k;
  double tol;
  bool operator<(const CoeffKey& o) const {
    return std::tie(n, primed, log_weight, k, tol) <
           std::tie(o.n, o.primed, o.log_weight, o.k, o.tol);
  }
};

std::map<CoeffKey, double>& coeff_cache() {
  static std::map<CoeffKey, double> cache;
  return cache;
}
std::mutex& coeff_mutex() {
  static std::mutex m;
  return m;
}

double coeff_integral(const CoefficientIndex& idx, double k, bool log_weight,
                      double tol) {
  if (!(k > 0.0) || k >= 4.0) {
    if (k == 4.0) return 0.0;
    throw DomainError("coefficient integral: requires 0 < k <= 4");
  }
  const CoeffKey key{idx.n, idx.primed, log_weight, k, tol};
  {
    std::lock_guard<std::mutex> lock(coeff_mutex());
    auto it = coeff_cache().find(key);
    if (it != coeff_cache().end()) return it->second;
  }
  quadrature::QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = tol;
  const int twon = 2 * idx.n;
  const bool primed = idx.primed;
  auto integrand = [twon, primed, log_weight](double t) {
    double v = primed ? g_density(t) : f_density(t);
    v *= std::pow(t, twon);
    if (log_weight) v *= std::log(t);
    return v;
  };
  const double value = quadrature::integrate(integrand, k, 4.0, spec).value;
  std::lock_guard<std::mutex> lock(coeff_mutex());
  coeff_cache().emplace(key, value);
  return value;
}

}  // namespace

double coeff_c(const CoefficientIndex& idx, const FamilyParamK& k, double tol) {
  return coeff_integral(idx, k.k, false, tol);
}

double coeff_d(const CoefficientIndex& idx, const FamilyParamK& k, double tol) {
  return coeff_integral(idx, k.k, true, tol);
}

double theta_y0(double t) {
  if (!(t > 0.0) || t > 4.0) throw DomainError("theta_y0: requires t in (0,4]");
  if (t == 4.0) return 0.0;
  return -coeff_c(CoefficientIndex(0, false), FamilyParamK(t));
}

double y0(double t) {
  if (!(t > 0.0) || t > 4.0) throw DomainError("y0: requires t in (0,4]");
  if (t == 4.0) return 0.0;
  const FamilyParamK kt(t);
  return coeff_d(CoefficientIndex(0, false), kt) + std::log(t) * theta_y0(t);
}

double p_u(double t) { return t * y0(t); }

}  // namespace arealm::densities
