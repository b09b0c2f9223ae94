#ifndef AREALM_DENSITIES_HPP
#define AREALM_DENSITIES_HPP

// Random-walk densities and the auxiliary integral functions built on them:
//   p_t1   density of |X+Y|, X,Y area-uniform on the unit disk
//   p_s1   density of |X+Y|, X,Y uniform on the unit circle
//   p_cond conditional density of |X+Y+kZ| given |X+Y| = v, Z on the circle
//   F, G   weights (1/2pi) 2F1(1/2,+-1/2;1;1-t^2/16), i.e. K,E up to scale
//   y0, p_u  the |(1+X)(1+Y)| density machinery
//   c_n, d_n (and primed variants with G) coefficient integrals over [k,4]

#include <functional>

#include "arealm/errors.hpp"

namespace arealm::densities {

// Constant term k of the family x+y+k or (x+1)(y+1)+kz; non-negative.
struct FamilyParamK {
  double k;

  explicit FamilyParamK(double k_) : k(k_) {
    if (!(k >= 0.0)) throw DomainError("FamilyParamK: requires k >= 0");
  }
};

// Selects c_n/d_n (with F) or c'_n/d'_n (with G). Only n in -1..2 appear in
// the closed forms; n = -1 is valid for the primed variants only.
struct CoefficientIndex {
  int n;
  bool primed;

  CoefficientIndex(int n_, bool primed_) : n(n_), primed(primed_) {
    if (n > 4) throw DomainError("CoefficientIndex: n <= 4 required");
    if (primed ? n < -1 : n < 0)
      throw DomainError("CoefficientIndex: n >= 0 (>= -1 when primed)");
  }
};

// (v/pi)(2pi - v sqrt(4-v^2) - 4 asin(v/2)) on [0, 2].
double p_t1(double v);

// 2 / (pi sqrt(4 - v^2)) on [0, 2); singular at v = 2.
double p_s1(double v);

// 2u / (pi sqrt(4k^2v^2 - (u^2-v^2-k^2)^2)) on |k-v| < u < k+v.
double p_cond(double u, double v, const FamilyParamK& k);

// F(t) = K(1 - t^2/16) / pi^2 on (0, 4]; log-divergent as t -> 0+.
double f_density(double t);

// G(t) = E(1 - t^2/16) / pi^2 on [0, 4].
double g_density(double t);

// c_n(k) = int_k^4 t^{2n} F dt  (primed: G). Memoized per (idx, k, tol).
double coeff_c(const CoefficientIndex& idx, const FamilyParamK& k,
               double tol = 1e-13);

// d_n(k) = int_k^4 t^{2n} log(t) F dt  (primed: G).
double coeff_d(const CoefficientIndex& idx, const FamilyParamK& k,
               double tol = 1e-13);

// Unique solution of (t d/dt)^2 y = t F(t) with y(4) = y'(4) = 0:
//   theta_y0(t) = -int_t^4 F du,  y0(t) = int_t^4 log(u) F du + log(t) theta_y0(t).
double y0(double t);
double theta_y0(double t);

// Density of |(1+X)(1+Y)| over the bidisk: p_u(t) = t y0(t).
double p_u(double t);

// int_0^b g(t) F(t) dt with the t = 4 exp(-w) substitution absorbing the
// logarithmic singularity of F at t = 0. g must be bounded near 0.
double integrate_f_weighted_from_zero(const std::function<double(double)>& g,
                                      double b, double tol = 1e-13);

}  // namespace arealm::densities

#endif
