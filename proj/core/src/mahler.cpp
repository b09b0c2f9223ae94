#include "arealm/mahler.hpp"

#include <cmath>

#include "arealm/polyroots.hpp"
#include "arealm/quadrature.hpp"
#include "arealm/specfun.hpp"

namespace arealm::mahler {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

using specfun::HypergeometricSpec;
using specfun::pfq;

double hyp3f2_real(double a1, double a2, double a3, double b1, double b2,
                   double z) {
  if (z == 1.0) {
    return specfun::pfq_at_unity({a1, a2, a3}, {b1, b2}).real();
  }
  return pfq(HypergeometricSpec({a1, a2, a3}, {b1, b2}, z)).real();
}

}  // namespace

UniPoly::UniPoly(std::vector<Complex> coeffs) : coefficients(std::move(coeffs)) {
  if (coefficients.size() < 2)
    throw DomainError("UniPoly: degree >= 1 required");
  if (std::abs(coefficients.back()) == 0.0)
    throw DomainError("UniPoly: leading coefficient must be nonzero");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::cassaigne_maillot: return "cassaigne-maillot";
    case Method::hypergeometric: return "hypergeometric";
    case Method::difference_thm: return "difference-thm";
    case Method::density_route: return "density-route";
    case Method::jensen_roots: return "jensen-roots";
    case Method::pritsker_roots: return "pritsker-roots";
    case Method::shortcut: return "shortcut";
  }
  return "unknown";
}

double m_minus_md_xyk(double k) {
  if (!(k >= 0.0) || k > 2.0)
    throw DomainError("m_minus_md_xyk: requires k in [0,2]");
  const double s = std::sqrt(4.0 - k * k);
  return (k * s * (10.0 + k * k) + (8.0 - 16.0 * k * k) * std::acos(0.5 * k)) /
         (16.0 * kPi);
}

MeasureValue m_xyk(const FamilyParamK& kk, XykRoute route) {
  const double k = kk.k;
  if (k >= 2.0) {
    return {std::log(k), route == XykRoute::cm ? Method::cassaigne_maillot
                                               : Method::hypergeometric};
  }
  if (route == XykRoute::cm) {
    if (k == 0.0) return {0.0, Method::cassaigne_maillot};
    const double phi = std::asin(0.5 * k);
    const double d = specfun::bloch_wigner(std::polar(1.0, 2.0 * phi));
    return {(2.0 * std::log(k) * phi + d) / kPi, Method::cassaigne_maillot};
  }
  const double v =
      k / kPi * hyp3f2_real(0.5, 0.5, 0.5, 1.5, 1.5, 0.25 * k * k);
  return {v, Method::hypergeometric};
}

MeasureValue md_xyk(const FamilyParamK& kk, MdXykRoute route) {
  const double k = kk.k;
  if (k >= 2.0) {
    Method m = route == MdXykRoute::hyp3f2 ? Method::hypergeometric
               : route == MdXykRoute::difference ? Method::difference_thm
                                                 : Method::cassaigne_maillot;
    return {std::log(k), m};
  }
  switch (route) {
    case MdXykRoute::hyp3f2: {
      const double f0 = hyp3f2_real(-0.5, 0.5, 1.5, 2.5, 2.5, 0.25 * k * k);
      return {-4.0 * k * k * k / (9.0 * kPi) * f0 + 0.5 * k * k - 0.25,
              Method::hypergeometric};
    }
    case MdXykRoute::difference:
      return {m_xyk(kk, XykRoute::hyp).value - m_minus_md_xyk(k),
              Method::difference_thm};
    case MdXykRoute::dilog:
      return {m_xyk(kk, XykRoute::cm).value - m_minus_md_xyk(k),
              Method::cassaigne_maillot};
  }
  throw DomainError("md_xyk: unknown route");
}

MeasureValue m_qk(const FamilyParamK& kk) {
  const double k = kk.k;
  if (!(k > 0.0)) throw DomainError("m_qk: requires k > 0");
  if (k >= 4.0) return {std::log(k), Method::density_route};
  const densities::CoefficientIndex i0(0, false);
  const double c0 = densities::coeff_c(i0, kk);
  const double d0 = densities::coeff_d(i0, kk);
  return {std::log(k) + d0 - std::log(k) * c0, Method::density_route};
}

MeasureValue md_qk(const FamilyParamK& kk, MdQkRoute route) {
  const double k = kk.k;
  if (!(k > 0.0)) throw DomainError("md_qk: requires k > 0");
  if (k >= 4.0) {
    return {9.0 / (8.0 * k * k) - 0.5 + std::log(k),
            route == MdQkRoute::thm12 ? Method::difference_thm
                                      : Method::density_route};
  }
  if (route == MdQkRoute::thm12) {
    const double c0 = densities::coeff_c(densities::CoefficientIndex(0, false), kk);
    const double F = densities::f_density(k);
    const double G = densities::g_density(k);
    const double m = m_qk(kk).value;
    const double k2 = k * k;
    double v = (k2 + 8.0) / 8.0 * m + 9.0 / (8.0 * k2) - 0.5 -
               k2 / 8.0 * std::log(k) +
               c0 * (0.5 - 9.0 / (8.0 * k2) + 5.0 * k2 / 32.0) +
               F * (-9.0 / (8.0 * k) - 29.0 * k / 64.0 + 17.0 * k2 * k / 128.0) +
               G * (-9.0 / (8.0 * k) - 49.0 * k / 32.0);
    return {v, Method::difference_thm};
  }
  // Density route: 9/(8k^2) - 1/2 + log k + int_k^4 p_U (log t - t^2/(2k^2)
  // + 1/2 - log k) dt, with p_U evaluated through its own quadratures.
  quadrature::QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = 1e-12;
  const double logk = std::log(k);
  auto integrand = [&](double t) {
    return densities::p_u(t) *
           (std::log(t) - t * t / (2.0 * k * k) + 0.5 - logk);
  };
  const double integral = quadrature::integrate(integrand, k, 4.0, spec).value;
  return {9.0 / (8.0 * k * k) - 0.5 + logk + integral, Method::density_route};
}

namespace {

MeasureValue roots_formula(const UniPoly& p, bool areal) {
  // Dominant-constant shortcut: |a_0| >= sum of all |a_j| forces
  // m = m_D = log|a_0|.
  double coef_sum = 0.0;
  for (std::size_t j = 1; j < p.coefficients.size(); ++j) {
    coef_sum += std::abs(p.coefficients[j]);
  }
  const double a0 = std::abs(p.coefficients[0]);
  if (a0 > 0.0 && a0 >= coef_sum) {
    return {std::log(a0), Method::shortcut};
  }
  const auto roots = polyroots::roots(p.coefficients);
  double v = std::log(std::abs(p.coefficients.back()));
  for (const Complex& r : roots) {
    const double ar = std::abs(r);
    if (ar > 1.0) v += std::log(ar);
    if (areal && ar < 1.0) v += 0.5 * (ar * ar - 1.0);
  }
  return {v, areal ? Method::pritsker_roots : Method::jensen_roots};
}

}  // namespace

MeasureValue jensen_mahler(const UniPoly& p) { return roots_formula(p, false); }

MeasureValue pritsker_areal(const UniPoly& p) { return roots_formula(p, true); }

double deninger_volume(DeningerFamily family, const FamilyParamK& kk) {
  const double k = kk.k;
  switch (family) {
    case DeningerFamily::qk_z:
      if (!(k > 0.0) || !(k < 4.0))
        throw DomainError("deninger_volume: qk families require 0 < k < 4");
      return densities::coeff_c(densities::CoefficientIndex(0, false), kk);
    case DeningerFamily::qk_x:
      if (!(k > 0.0) || !(k < 4.0))
        throw DomainError("deninger_volume: qk families require 0 < k < 4");
      return 1.0 -
             0.5 * densities::coeff_c(densities::CoefficientIndex(0, false), kk);
    case DeningerFamily::xyk_x:
      if (!(k > 0.0) || !(k <= 2.0))
        throw DomainError("deninger_volume: xyk requires 0 < k <= 2");
      return 1.0 - std::acos(0.5 * k) / kPi;
  }
  throw DomainError("deninger_volume: unknown family");
}

}  // namespace arealm::mahler
