#ifndef AREALM_ZETAMAHLER_HPP
#define AREALM_ZETAMAHLER_HPP

// Classical and areal Zeta Mahler functions of x+k, x+y, x+y+k as explicit
// Gamma/hypergeometric combinations, Mahler-measure recovery by
// complex-step differentiation at s = 0, and the complex zero search with
// an argument-principle audit.

#include <complex>
#include <vector>

#include "arealm/densities.hpp"

namespace arealm::zetamahler {

using Complex = std::complex<double>;
using densities::FamilyParamK;

// Z(s, x+k): 2F1(-s/2,-s/2;1;|k|^2) for |k|<1, |k|^s 2F1(-s/2,-s/2;1;|k|^-2)
// for |k|>1, Gamma(1+s)/Gamma(1+s/2)^2 at |k| = 1.
Complex z_x_plus_k(Complex s, const FamilyParamK& k);

// Z_D(s, x+y) = 4/(s+4) Gamma(2+s)/Gamma(2+s/2)^2. Poles flagged.
Complex zd_xy(Complex s);

// Z_D(s, x+y+k). For k >= 2 the single 3F2 form; for 0 <= k < 2 the
// two-solution combination. Real odd s (where tan(pi s/2) and a lower
// parameter degenerate simultaneously) is evaluated as the continuity limit
// by Richardson-extrapolated averaging of s +- h.
Complex zd_xyk(Complex s, const FamilyParamK& k);

// Z(s, x+y+k), same branch structure with the classical coefficients.
Complex z_xyk(Complex s, const FamilyParamK& k);

enum class ZetaFunction { zd_xy, zd_xyk, z_xyk };

// d/ds Z(s,.)|_{s=0} by complex-step differentiation (imaginary displacement,
// no subtractive cancellation); recovers the corresponding Mahler measure.
// A two-step consistency check guards against step-size failure.
double mahler_from_derivative(ZetaFunction which, const FamilyParamK& k);

struct ZeroBox {
  double re_min, re_max, im_min, im_max;
  int grid_density = 12;  // grid points per unit length

  void validate() const {
    if (!(re_min < re_max) || !(im_min < im_max))
      throw DomainError("ZeroBox: requires re_min < re_max, im_min < im_max");
    if (grid_density < 1) throw DomainError("ZeroBox: grid_density >= 1");
  }
};

struct ZeroRecord {
  Complex location;
  double residual;
  ZeroBox box;
};

// All zeros of Z_D(s, x+y+k) inside the box: |Z| grid minima refined by
// Newton iteration, deduplicated, then certified by comparing the count
// against the winding number of Z along the box boundary.
// Throws WindingMismatch when the audit disagrees (grid too coarse).
std::vector<ZeroRecord> find_zeros(const ZeroBox& box, const FamilyParamK& k);

// Winding number of Z_D(s, x+y+k) along the box boundary (zeros inside,
// assuming no poles). Exposed for the argument-principle checks.
int winding_count(const ZeroBox& box, const FamilyParamK& k);

// Analytic continuation G(kc) of the k > 2 closed form
// kc^s 3F2(-s/2,-s/2,3/2;2,3;4/kc^2) to the upper half k-plane, evaluated
// through the density integral with the Euler-integral 2F1 kernel.
Complex g_big_continuation(Complex s, Complex kc);

// Z_D at real s > 0 (not an odd integer) through the boundary-value
// structure Re G - cot(pi s/2) Im G, with the eps -> 0+ ladder
// {1e-2,1e-3,1e-4} extrapolated by Richardson.
double zd_xyk_via_continuation(double s, const FamilyParamK& k);

// Independent definition route for real s > -2:
//   int_0^2 int_{|k-v|}^{k+v} u^s p_cond(u|v) p_t1(v) du dv,
// with the inner square-root endpoints absorbed by a sin^2 substitution.
// Used as the quadrature oracle against the closed forms.
double zd_xyk_via_density_quadrature(double s, const FamilyParamK& k,
                                     double tol = 1e-11);

}  // namespace arealm::zetamahler

#endif
