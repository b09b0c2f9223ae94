#ifndef AREALM_MAHLER_HPP
#define AREALM_MAHLER_HPP

// Closed-form classical and areal Mahler measures for the families x+y+k and
// Q_k = (x+1)(y+1)+kz, Jensen/Pritsker formulas for univariate polynomials,
// and the Deninger-cycle volumes.

#include <complex>
#include <string>
#include <vector>

#include "arealm/densities.hpp"

namespace arealm::mahler {

using Complex = std::complex<double>;
using densities::FamilyParamK;

// Univariate polynomial, constant term first.
struct UniPoly {
  std::vector<Complex> coefficients;

  explicit UniPoly(std::vector<Complex> coeffs);
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

enum class Method {
  cassaigne_maillot,
  hypergeometric,
  difference_thm,
  density_route,
  jensen_roots,
  pritsker_roots,
  shortcut,
};

std::string method_name(Method m);

struct MeasureValue {
  double value;
  Method method;
};

enum class XykRoute { cm, hyp };
enum class MdXykRoute { hyp3f2, difference, dilog };
enum class MdQkRoute { thm12, density };
enum class DeningerFamily { qk_z, qk_x, xyk_x };

// m(x+y+k): log k for k >= 2; Cassaigne-Maillot dilogarithm form (cm) or
// (k/pi) 3F2(1/2,1/2,1/2;3/2,3/2;k^2/4) (hyp) for 0 <= k < 2.
MeasureValue m_xyk(const FamilyParamK& k, XykRoute route = XykRoute::cm);

// m_D(x+y+k): log k for k >= 2; for 0 <= k < 2 either the direct 3F2 form,
// or m(x+y+k) minus the elementary difference term (via hyp or cm for the
// Mahler-measure leg respectively).
MeasureValue md_xyk(const FamilyParamK& k, MdXykRoute route = MdXykRoute::hyp3f2);

// The elementary difference m - m_D for 0 <= k <= 2:
//   [k sqrt(4-k^2)(10+k^2) + (8-16k^2) arccos(k/2)] / (16 pi).
double m_minus_md_xyk(double k);

// m(Q_k): log k for k >= 4; log k + d0(k) - log(k) c0(k) for 0 < k < 4.
MeasureValue m_qk(const FamilyParamK& k);

// m_D(Q_k): 9/(8k^2) - 1/2 + log k for k >= 4; for 0 < k < 4 either the
// assembled closed form (thm12) or the p_U density integral (density).
MeasureValue md_qk(const FamilyParamK& k, MdQkRoute route = MdQkRoute::thm12);

// Jensen: log|a| + sum log+|alpha_j|. Pritsker adds (|alpha|^2-1)/2 per
// root inside the open unit disk.
MeasureValue jensen_mahler(const UniPoly& p);
MeasureValue pritsker_areal(const UniPoly& p);

// Deninger-cycle volumes: qk_z -> c0(k); qk_x -> 1 - c0(k)/2;
// xyk_x -> 1 - arccos(k/2)/pi.
double deninger_volume(DeningerFamily family, const FamilyParamK& k);

}  // namespace arealm::mahler

#endif
