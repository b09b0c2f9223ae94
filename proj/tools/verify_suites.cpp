#include "verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "arealm/densities.hpp"
#include "arealm/mahler.hpp"
#include "arealm/modular.hpp"
#include "arealm/quadrature.hpp"
#include "arealm/specfun.hpp"
#include "arealm/walks.hpp"
#include "arealm/zetamahler.hpp"

namespace arealm::cli {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
using Complex = std::complex<double>;
using densities::CoefficientIndex;
using densities::FamilyParamK;

void add(std::vector<CheckResult>& out, const std::string& name, double residual,
         double tol) {
  out.push_back({name, residual, tol, std::abs(residual) <= tol});
}

std::vector<CheckResult> suite_thm11(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  double worst = 0.0, worst_routes = 0.0;
  const int n = std::max(2, opt.grid);
  for (int i = 1; i <= n; ++i) {
    const double k = 2.0 * i / (n + 1);
    const FamilyParamK fk(k);
    const double m = mahler::m_xyk(fk, mahler::XykRoute::hyp).value;
    const double md = mahler::md_xyk(fk, mahler::MdXykRoute::hyp3f2).value;
    worst = std::max(worst, std::abs(m - md - mahler::m_minus_md_xyk(k)));
    const double md_dl = mahler::md_xyk(fk, mahler::MdXykRoute::dilog).value;
    const double md_df = mahler::md_xyk(fk, mahler::MdXykRoute::difference).value;
    worst_routes = std::max({worst_routes, std::abs(md - md_dl), std::abs(md - md_df),
                             std::abs(md_dl - md_df)});
  }
  add(out, "thm11-residual(grid " + std::to_string(n) + ")", worst, 1e-10);
  add(out, "md-route-agreement", worst_routes, 1e-10);
  return out;
}

std::vector<CheckResult> suite_crazymatrix(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  for (double k : opt.ks) {
    if (!(k > 0.0) || !(k < 4.0)) continue;
    const FamilyParamK fk(k);
    const double c0 = densities::coeff_c(CoefficientIndex(0, false), fk);
    const double c1 = densities::coeff_c(CoefficientIndex(1, false), fk);
    const double c2 = densities::coeff_c(CoefficientIndex(2, false), fk);
    const double d0 = densities::coeff_d(CoefficientIndex(0, false), fk);
    const double d1 = densities::coeff_d(CoefficientIndex(1, false), fk);
    const double F = densities::f_density(k);
    const double G = densities::g_density(k);
    const double k2 = k * k, k3 = k2 * k, k5 = k3 * k2, lk = std::log(k);
    const double i1 = 20.0 / k * c0 - 3.0 * (k2 + 12.0) / k3 * c1 +
                      4.0 / k3 * c2 + 8.0 / k * d0 - 2.0 / k * d1 +
                      (8.0 - k2) * lk * F + 8.0 * lk * G;
    const double i2 = 120.0 / k3 * c0 - 30.0 * (k2 + 12.0) / k5 * c1 +
                      40.0 / k5 * c2 - 5.0 * F + 80.0 / k2 * G;
    const double i3 = 8.0 / k * c0 - 2.0 / k * c1 + (8.0 - k2) * F + 8.0 * G;
    const std::string tag = "(k=" + std::to_string(k) + ")";
    add(out, "identity-1" + tag, i1, 1e-9);
    add(out, "identity-2" + tag, i2, 1e-9);
    add(out, "identity-3" + tag, i3, 1e-9);
  }
  return out;
}

std::vector<CheckResult> suite_ibp(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  for (double k : opt.ks) {
    if (!(k > 0.0) || !(k < 4.0)) continue;
    const FamilyParamK fk(k);
    const double F = densities::f_density(k);
    const double G = densities::g_density(k);
    const double lk = std::log(k);
    for (int n = 1; n <= 2; ++n) {
      const double cn = densities::coeff_c(CoefficientIndex(n, false), fk);
      const double dn = densities::coeff_d(CoefficientIndex(n, false), fk);
      const double cpn = densities::coeff_c(CoefficientIndex(n, true), fk);
      const double dpn = densities::coeff_d(CoefficientIndex(n, true), fk);
      const double cpn1 = densities::coeff_c(CoefficientIndex(n - 1, true), fk);
      const double dpn1 = densities::coeff_d(CoefficientIndex(n - 1, true), fk);
      const double kp = std::pow(k, 2 * n + 1);
      const double tn = 2.0 * n - 1.0;
      const double r1 =
          cn / kp - (16.0 / (k * k) * G - F - tn / kp * (cn - 16.0 * cpn1));
      const double r2 = dn / kp - ((16.0 * cpn1 - cn) / kp -
                                   tn / kp * (dn - 16.0 * dpn1) +
                                   lk * (16.0 / (k * k) * G - F));
      const double r3 =
          cpn / kp - ((32.0 / (k * k) - 1.0) * G / 3.0 - F / 3.0 -
                      tn / (3.0 * kp) * (cn + cpn - 32.0 * cpn1));
      const double r4 =
          dpn / kp - (-(cn + cpn - 32.0 * cpn1) / (3.0 * kp) -
                      tn / (3.0 * kp) * (dn + dpn - 32.0 * dpn1) +
                      lk / 3.0 * ((32.0 / (k * k) - 1.0) * G - F));
      const std::string tag = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
      add(out, "ibp-c" + tag, r1, 1e-9);
      add(out, "ibp-d" + tag, r2, 1e-9);
      add(out, "ibp-cp" + tag, r3, 1e-9);
      add(out, "ibp-dp" + tag, r4, 1e-9);
    }
  }
  return out;
}

std::vector<CheckResult> suite_sec33(const SuiteOptions&) {
  std::vector<CheckResult> out;
  using specfun::HypergeometricSpec;
  for (int i = 1; i <= 9; ++i) {
    const double z = 0.1 * i;
    const double lhs =
        specfun::pfq(HypergeometricSpec({0.5, 0.5, 0.5}, {1.5, 1.5}, z)).real() +
        16.0 * z / 9.0 *
            specfun::pfq(HypergeometricSpec({-0.5, 0.5, 1.5}, {2.5, 2.5}, z)).real();
    const Complex sqz = std::sqrt(Complex(-z));  // principal branch: i sqrt(z)
    const Complex rhs =
        (2.0 * z + 5.0) * std::sqrt(1.0 - z) / 4.0 -
        (1.0 - 8.0 * z) * std::log(std::sqrt(Complex(1.0 - z)) + sqz) /
            (4.0 * sqz);
    add(out, "sec33-combination(z=" + std::to_string(z) + ")",
        std::abs(lhs - rhs.real()) + std::abs(rhs.imag()), 1e-9);
  }
  return out;
}

std::vector<CheckResult> suite_csqrt2(const SuiteOptions&) {
  std::vector<CheckResult> out;
  using specfun::gamma;
  const double g34 = gamma(Complex(0.75)).real();
  const double g14 = gamma(Complex(0.25)).real();
  const double pre = std::sqrt(2.0 * kPi * kPi * kPi);
  const double t1 =
      g34 * g34 / pre *
      specfun::pfq_at_unity({0.25, 0.25, 0.75, 0.75}, {0.5, 1.25, 1.25}).real();
  const double t2 =
      g14 * g14 / (72.0 * pre) *
      specfun::pfq_at_unity({0.75, 0.75, 1.25, 1.25}, {1.5, 1.75, 1.75}).real();
  add(out, "c-sqrt2-4f3-combination", t1 - t2 - std::log(2.0) / 4.0, 1e-9);
  return out;
}

std::vector<CheckResult> suite_c0triple(const SuiteOptions&) {
  std::vector<CheckResult> out;
  const double ks[3] = {1.0, 2.0, std::sqrt(8.0)};
  for (double k : ks) {
    const FamilyParamK fk(k);
    const double quad = densities::coeff_c(CoefficientIndex(0, false), fk);
    const auto pt = modular::solve_tk(fk);
    const double qs =
        modular::c0_qseries(pt, modular::c0_qseries_suggested_terms(pt));
    const modular::LatticeCutoff cutoff(200);
    const Complex lat = modular::c0_lattice(pt, cutoff);
    const std::string tag = "(k=" + std::to_string(k) + ")";
    add(out, "c0-quadrature-vs-qseries" + tag, quad - qs, 1e-10);
    // The raw symmetric truncation converges like ~0.405/cutoff (n-tail).
    add(out, "c0-lattice200-vs-qseries" + tag, lat.real() - qs, 2.0 / 200.0);
    add(out, "c0-lattice-imag" + tag, lat.imag(), 1e-12);
  }
  return out;
}

std::vector<CheckResult> suite_montecarlo(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  walks::MCConfig cfg;
  cfg.samples = opt.samples;
  cfg.batch = std::max<long long>(1, opt.samples / 1000);
  if (cfg.samples % cfg.batch != 0) cfg.samples = (cfg.samples / cfg.batch) * cfg.batch;
  cfg.seed = opt.seed;

  auto sigma_check = [&](std::vector<CheckResult>& o, const std::string& name,
                         const walks::MCEstimate& est, double target) {
    const double dev = std::abs(est.mean - target);
    o.push_back({name + " [4-sigma]", dev, 4.0 * est.std_error, dev <= 4.0 * est.std_error});
  };

  sigma_check(out, "mc-xyk(k=5) vs log5",
              walks::mc_areal_mahler_xyk(FamilyParamK(5.0), cfg), std::log(5.0));
  sigma_check(out, "mc-xyk(k=0) vs -1/4",
              walks::mc_areal_mahler_xyk(FamilyParamK(0.0), cfg), -0.25);
  sigma_check(out, "mc-xyk(k=1) vs closed form",
              walks::mc_areal_mahler_xyk(FamilyParamK(1.0), cfg),
              mahler::md_xyk(FamilyParamK(1.0)).value);
  sigma_check(out, "mc-qk(k=1) vs closed form",
              walks::mc_areal_mahler_qk(FamilyParamK(1.0), cfg),
              mahler::md_qk(FamilyParamK(1.0)).value);
  sigma_check(out, "mc-qk(k=5) vs 9/200-1/2+log5",
              walks::mc_areal_mahler_qk(FamilyParamK(5.0), cfg),
              9.0 / 200.0 - 0.5 + std::log(5.0));
  sigma_check(out, "mc-moment(s=2,xyk,k=0) vs 1",
              walks::mc_moment(2.0, FamilyParamK(0.0), walks::MomentFamily::xyk, cfg),
              1.0);
  sigma_check(out, "mc-moment(s=2,qk-f) vs 9/4",
              walks::mc_moment(2.0, FamilyParamK(1.0), walks::MomentFamily::qk_f_part, cfg),
              2.25);
  return out;
}

// One-sided limits: the 0<k<2 (resp. 0<k<4) formulas are continuous up to
// the branch point, so evaluating them AT k=2 / k=4 gives the limit exactly.
std::vector<CheckResult> suite_boundary(const SuiteOptions&) {
  std::vector<CheckResult> out;
  const double log2 = std::log(2.0);
  // m(x+y+k), hypergeometric branch at k=2 (unit-argument 3F2).
  const double m_left =
      2.0 / kPi * specfun::pfq_at_unity({0.5, 0.5, 0.5}, {1.5, 1.5}).real();
  add(out, "m_xyk left-limit at k=2 vs log 2", m_left - log2, 1e-8);
  // Cassaigne-Maillot branch: D(e^{i pi}) = 0.
  const double m_left_cm =
      (2.0 * log2 * std::asin(1.0) +
       specfun::bloch_wigner(std::polar(1.0, kPi))) / kPi;
  add(out, "m_xyk(cm) left-limit at k=2 vs log 2", m_left_cm - log2, 1e-8);
  // Areal branch at k=2: -32/(9 pi) 3F2(...;1) + 2 - 1/4 and the
  // difference term vanishes at k=2.
  const double md_left =
      -32.0 / (9.0 * kPi) *
          specfun::pfq_at_unity({-0.5, 0.5, 1.5}, {2.5, 2.5}).real() +
      2.0 - 0.25;
  add(out, "md_xyk left-limit at k=2 vs log 2",
      md_left - mahler::m_minus_md_xyk(2.0) - log2, 1e-8);
  // Q_k family at k=4: the coefficient integrals vanish.
  const FamilyParamK k4(4.0);
  const double c0 = densities::coeff_c(CoefficientIndex(0, false), k4);
  const double d0 = densities::coeff_d(CoefficientIndex(0, false), k4);
  const double log4 = std::log(4.0);
  const double mq_left = log4 + d0 - log4 * c0;
  add(out, "m_qk left-limit at k=4 vs log 4", mq_left - log4, 1e-8);
  const double F4 = densities::f_density(4.0);
  const double G4 = densities::g_density(4.0);
  const double md_qk_left =
      (16.0 + 8.0) / 8.0 * mq_left + 9.0 / 128.0 - 0.5 - 2.0 * log4 +
      c0 * (0.5 - 9.0 / 128.0 + 5.0 * 16.0 / 32.0) +
      F4 * (-9.0 / 32.0 - 29.0 * 4.0 / 64.0 + 17.0 * 64.0 / 128.0) +
      G4 * (-9.0 / 32.0 - 49.0 * 4.0 / 32.0);
  add(out, "md_qk left-limit at k=4 vs closed form",
      md_qk_left - (9.0 / 128.0 - 0.5 + log4), 1e-8);
  return out;
}

std::vector<CheckResult> suite_moments(const SuiteOptions&) {
  std::vector<CheckResult> out;
  quadrature::QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = 1e-12;
  spec.endpoint_rule = quadrature::EndpointRule::sqrt_singular;
  for (int n = 0; n <= 4; ++n) {
    const double mom =
        quadrature::integrate([n](double v) { return std::pow(v, 2 * n) * densities::p_t1(v); },
                              0.0, 2.0, spec)
            .value;
    const double pred = std::pow(4.0, n) *
                        specfun::pochhammer(Complex(1.5), n).real() /
                        ((n + 1.0) * specfun::pochhammer(Complex(3.0), n).real());
    add(out, "p_t1-moment(n=" + std::to_string(n) + ")", mom - pred, 1e-10);
  }
  quadrature::QuadratureSpec de;
  de.abs_tol = de.rel_tol = 1e-12;
  de.endpoint_rule = quadrature::EndpointRule::log_singular;
  add(out, "p_u-normalization",
      quadrature::integrate([](double t) { return densities::p_u(t); }, 0.0, 4.0, de).value - 1.0,
      1e-10);
  add(out, "p_u-second-moment",
      quadrature::integrate([](double t) { return t * t * densities::p_u(t); }, 0.0, 4.0, de).value -
          2.25,
      1e-10);
  return out;
}

std::vector<CheckResult> suite_definition(const SuiteOptions&) {
  std::vector<CheckResult> out;
  const double ss[3] = {1.0, 2.0, 3.0};
  const double ks[4] = {0.5, 1.0, 1.5, 3.0};
  for (double s : ss) {
    for (double k : ks) {
      const FamilyParamK fk(k);
      const double closed = zetamahler::zd_xyk(Complex(s), fk).real();
      const double quad = zetamahler::zd_xyk_via_density_quadrature(s, fk);
      add(out,
          "zd-definition(s=" + std::to_string(static_cast<int>(s)) +
              ",k=" + std::to_string(k) + ")",
          closed - quad, 1e-8);
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"thm11",     "crazymatrix", "ibp",        "sec33",
          "csqrt2",    "c0triple",    "montecarlo", "boundary",
          "moments",   "definition"};
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteOptions& opt) {
  if (suite == "thm11") return suite_thm11(opt);
  if (suite == "crazymatrix") return suite_crazymatrix(opt);
  if (suite == "ibp") return suite_ibp(opt);
  if (suite == "sec33") return suite_sec33(opt);
  if (suite == "csqrt2") return suite_csqrt2(opt);
  if (suite == "c0triple") return suite_c0triple(opt);
  if (suite == "montecarlo") return suite_montecarlo(opt);
  if (suite == "boundary") return suite_boundary(opt);
  if (suite == "moments") return suite_moments(opt);
  if (suite == "definition") return suite_definition(opt);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
      auto r = run_suite(name, opt);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  throw DomainError("unknown verify suite: " + suite);
}

}  // namespace arealm::cli
