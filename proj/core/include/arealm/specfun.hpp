#ifndef AREALM_SPECFUN_HPP
#define AREALM_SPECFUN_HPP

// Complex special functions: Gamma, generalized hypergeometric series,
// Gauss 2F1 with connection formulas, complete elliptic integrals by AGM,
// the dilogarithm and the Bloch-Wigner function, and the two Dirichlet
// L-values L(chi_{-3},2), L(chi_{-4},2).

#include <complex>
#include <vector>

#include "arealm/errors.hpp"

namespace arealm::specfun {

using Complex = std::complex<double>;

// Gamma function, principal determination. Relative accuracy ~1e-14 for
// |z| <= 50; reflection formula is used for Re(z) < 1/2.
// Throws PoleError at (numerical) non-positive integers.
Complex gamma(Complex z);

// Digamma function psi(z) = Gamma'(z)/Gamma(z).
Complex digamma(Complex z);

// Trigamma psi'(x) for real x > 0. Equals the Hurwitz zeta value zeta(2,x).
double trigamma(double x);

// Pochhammer symbol (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
Complex pochhammer(Complex a, int n);

// Parameters of a pFq series: upper a_1..a_p, lower b_1..b_q, argument z.
// Construction rejects lower parameters at non-positive integers.
struct HypergeometricSpec {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  Complex argument;

  HypergeometricSpec(std::vector<Complex> upper_, std::vector<Complex> lower_,
                     Complex argument_);
};

struct SeriesControl {
  int max_terms = 4'000'000;
  double tail_tol = 1e-14;

  SeriesControl() = default;
  SeriesControl(int max_terms_, double tail_tol_);
};

// Truncated pFq series with a tail bound below ctl.tail_tol (relative to the
// partial sum, with an absolute floor). Terminating series are summed exactly.
// For p = q+1, |z| = 1 requires Re(sum(lower) - sum(upper)) > 0.
// Throws NonConvergence if the tail bound is not met within max_terms.
Complex pfq(const HypergeometricSpec& spec, const SeriesControl& ctl = {});

// p+1Fp at unit argument, delta = Re(sum(lower)-sum(upper)) > 0 required.
// Direct partial sums are extrapolated against the algebraic tail
// S - S_N ~ N^{-delta}(c0 + c1/N + ...), so slowly convergent cases
// (delta close to 0) still reach ~1e-12.
Complex pfq_at_unity(const std::vector<Complex>& upper,
                     const std::vector<Complex>& lower);

// Gauss hypergeometric function on the z-plane cut along [1, inf).
// Argument transformations z -> z/(z-1) and z -> 1-z (with the logarithmic
// case when c-a-b is an integer) reduce to a series with small argument.
// z = 1 is allowed when Re(c-a-b) > 0 (Gauss summation); otherwise real
// z >= 1 throws CutViolation unless the series terminates.
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z);

// Complete elliptic integrals in the parameter m (not the modulus),
// computed by the arithmetic-geometric mean:
//   (2/pi) K(m) = 2F1(1/2,1/2;1;m),   (2/pi) E(m) = 2F1(1/2,-1/2;1;m).
// K requires m in [0,1); E accepts m in [0,1] with E(1) = 1.
double elliptic_k(double m);
double elliptic_e(double m);

// K and E at parameter m = 1 - mc, taking the complement mc directly so
// callers with m near 1 keep full precision (the AGM starts at b0 = sqrt(mc)).
double elliptic_k_complement(double mc);
double elliptic_e_complement(double mc);

// Dilogarithm Li_2, principal branch, cut along [1, inf); on the cut the
// limit from the upper half-plane is returned.
Complex dilog(Complex z);

// Bloch-Wigner function D(z) = Im(Li_2(z)) + arg(1-z) log|z|.
// Vanishes on the real axis; D(conj(z)) = -D(z).
double bloch_wigner(Complex z);

// L(chi_{-3}, 2) = (zeta(2,1/3) - zeta(2,2/3)) / 9.
double l_chi3_2();

// L(chi_{-4}, 2) = (zeta(2,1/4) - zeta(2,3/4)) / 16  (Catalan's constant).
double l_chi4_2();

}  // namespace arealm::specfun

#endif
