#ifndef AREALM_MODULAR_HPP
#define AREALM_MODULAR_HPP

// Dedekind eta, the eta-quotient modular function x(tau) for Gamma_1(8),
// inversion k -> t_k on the imaginary axis, and the two modular evaluations
// of c0(k): the chi_{-4}-twisted q-series and the slowly convergent lattice
// sum.

#include <complex>
#include <cstdint>
#include <vector>

#include "arealm/densities.hpp"

namespace arealm::modular {

using Complex = std::complex<double>;
using densities::FamilyParamK;

// Point on the imaginary axis with x(i/(4 t_k)) = k, q_k = exp(-pi t_k).
struct ModularPoint {
  double t_k;
  double q_k;
  double k;
};

struct LatticeCutoff {
  int max_abs_index;

  explicit LatticeCutoff(int m) : max_abs_index(m) {
    if (m < 3) throw DomainError("LatticeCutoff: requires max_abs_index >= 3");
  }
};

// eta(tau) = e^{pi i tau/12} prod (1-q^n), q = e^{2 pi i tau}, Im(tau) > 0.
// Arguments are first moved into the fast-convergence regime Im >= 1/2 by
// tau -> tau+1 and tau -> -1/tau reductions.
Complex eta(Complex tau);

// x(tau) = 16 (eta(2tau) eta(8tau)^2 / eta(4tau)^3)^4; maps the positive
// imaginary axis onto (0, 4).
Complex x_of_tau(Complex tau);

// Solve x(i/(4t)) = k for t by bracketing + bisection (x is increasing in t
// along the imaginary axis). Requires 0 < k < 4; residual |x - k| <= 1e-12.
ModularPoint solve_tk(const FamilyParamK& k);

// c0(k) = (16/pi) sum_{d,f>=1, f odd} (d/f)(-1)^{d+1} chi_{-4}(f) q_k^{df},
// summed over n = d f with the divisor structure; `terms` is the number of
// q-powers kept. If tail_bound is given it receives an upper estimate for
// the dropped tail.
double c0_qseries(const ModularPoint& pt, int terms,
                  double* tail_bound = nullptr);

// Number of q-powers needed for q^terms < 1e-16.
int c0_qseries_suggested_terms(const ModularPoint& pt);

// Truncation of (8i/pi^3) sum_{m,n odd} e^{-2 pi i m/4} / ((m tau_k+n)^2 m)
// over |m|,|n| <= cutoff. The symmetric truncation is conjugate-even, so the
// imaginary part is roundoff-level; the real part converges to c0(k) at the
// slow O(1/cutoff) rate set by the n-tail.
Complex c0_lattice(const ModularPoint& pt, const LatticeCutoff& cutoff);

// Coefficients a(1..n_max) of (eta(4t)^4 eta(t)^2 / eta(2t)^3)^2 as the
// divisor sum (-1)^n sum_{d|n} d^2 (-1)^{n/d} chi_{-4}(n/d).
std::vector<std::int64_t> eisenstein_coeffs(int n_max);

// The same coefficients from the eta-quotient q-expansion in integer
// arithmetic (independent route for the cross-check).
std::vector<std::int64_t> eta_quotient_coeffs(int n_max);

}  // namespace arealm::modular

#endif
