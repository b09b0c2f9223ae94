#include "arealm/zetamahler.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "arealm/quadrature.hpp"
#include "arealm/specfun.hpp"

namespace arealm::zetamahler {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

using specfun::gamma;
using specfun::HypergeometricSpec;
using specfun::pfq;

// tan(pi s / 2) with the argument reduced by the nearest integer first, so
// the distance to the pole enters through an exact subtraction instead of
// through the rounding of pi s / 2 itself.
Complex tan_half_pi(Complex s) {
  const double n = std::round(s.real());
  const Complex d = s - n;
  const Complex t = std::tan(0.5 * kPi * d);
  if (std::fmod(std::abs(n), 2.0) < 0.5) return t;  // n even
  return -1.0 / t;                                   // n odd: pole at d = 0
}

Complex alpha0(Complex s) {
  const Complex g1 = gamma(1.0 + 0.5 * s);
  const Complex g2 = gamma(0.5 * (5.0 + s));
  return -std::pow(2.0, s + 2.0) * tan_half_pi(s) * g1 * g1 /
         (kPi * g2 * g2);
}

Complex alpha1(Complex s) {
  const Complex g2 = gamma(2.0 + 0.5 * s);
  return 4.0 / (s + 4.0) * gamma(2.0 + s) / (g2 * g2);
}

Complex beta0(Complex s) {
  const Complex r =
      gamma(1.0 + s) / (gamma(0.5 * (1.0 + s)) * gamma(0.5 * (3.0 + s)));
  return std::pow(2.0, -s) * tan_half_pi(s) * r * r;
}

Complex beta1(Complex s) {
  const Complex g = gamma(1.0 + 0.5 * s);
  return gamma(1.0 + s) / (g * g);
}

// The small-k combinations degenerate at odd integers (tan pole against a
// lower-parameter pole); within this ring of an odd integer the raw formula
// loses ~eps/|s - odd| of relative accuracy, so a Taylor step from a safe
// stencil is used instead.
constexpr double kOddRing = 1e-4;

bool near_real_odd_integer(Complex s) {
  const double r = std::round(s.real());
  if (std::llround(std::abs(r)) % 2 != 1) return false;
  return std::abs(s - r) <= kOddRing;
}

void check_small_k_poles(Complex s) {
  // Gamma(2+s) poles at s = -2,-3,..., plus the explicit 1/(s+4) factor.
  if (std::abs(s.imag()) > 1e-11) return;
  const double r = std::round(s.real());
  if (std::abs(s.real() - r) < 1e-11 && r <= -2.0) {
    throw PoleError("zeta mahler: pole at negative integer s");
  }
}

Complex zd_xyk_raw(Complex s, double k) {
  if (k >= 2.0) {
    if (k == 2.0) {
      return std::pow(Complex(k), s) *
             specfun::pfq_at_unity({-0.5 * s, -0.5 * s, 1.5}, {2.0, 3.0});
    }
    return std::pow(Complex(k), s) *
           pfq(HypergeometricSpec({-0.5 * s, -0.5 * s, 1.5}, {2.0, 3.0},
                                  4.0 / (k * k)));
  }
  check_small_k_poles(s);
  if (k == 0.0) return alpha1(s);
  const Complex z = 0.25 * k * k;
  const Complex f0 =
      pfq(HypergeometricSpec({-0.5, 0.5, 1.5},
                             {0.5 * (5.0 + s), 0.5 * (5.0 + s)}, z));
  const Complex f1 =
      pfq(HypergeometricSpec({-2.0 - 0.5 * s, -1.0 - 0.5 * s, -0.5 * s},
                             {1.0, -0.5 * (1.0 + s)}, z));
  return alpha0(s) * std::pow(Complex(0.5 * k), s + 3.0) * f0 +
         alpha1(s) * f1;
}

Complex z_xyk_raw(Complex s, double k) {
  if (k >= 2.0) {
    if (k == 2.0) {
      return std::pow(Complex(k), s) *
             specfun::pfq_at_unity({-0.5 * s, -0.5 * s, 0.5}, {1.0, 1.0});
    }
    return std::pow(Complex(k), s) *
           pfq(HypergeometricSpec({-0.5 * s, -0.5 * s, 0.5}, {1.0, 1.0},
                                  4.0 / (k * k)));
  }
  if (std::abs(s.imag()) < 1e-11) {
    const double r = std::round(s.real());
    if (std::abs(s.real() - r) < 1e-11 && r <= -1.0) {
      throw PoleError("z_xyk: pole of Gamma(1+s) at negative integer s");
    }
  }
  if (k == 0.0) return beta1(s);
  const Complex z = 0.25 * k * k;
  const Complex g0 = pfq(HypergeometricSpec(
      {0.5, 0.5, 0.5}, {0.5 * (3.0 + s), 0.5 * (3.0 + s)}, z));
  const Complex g1 = pfq(HypergeometricSpec(
      {-0.5 * s, -0.5 * s, -0.5 * s}, {1.0, 0.5 * (1.0 - s)}, z));
  return beta0(s) * std::pow(Complex(0.5 * k), 1.0 + s) * g0 + beta1(s) * g1;
}

// Taylor evaluation inside the odd ring: the limit value, first and second
// derivative at the odd integer come from a four-point stencil at a safe
// distance, then Z(s0 + d) = L + d L' + d^2 L''/2 (|d| <= 1e-4, so the
// cubic remainder is negligible).
template <typename Raw>
Complex odd_s_limit(const Raw& raw, Complex s, double k) {
  const double s0 = std::round(s.real());
  const Complex d = s - s0;
  const double h = 1e-3;
  const Complex vp1 = raw(Complex(s0 + h), k);
  const Complex vm1 = raw(Complex(s0 - h), k);
  const Complex vp2 = raw(Complex(s0 + 2.0 * h), k);
  const Complex vm2 = raw(Complex(s0 - 2.0 * h), k);
  const Complex even1 = 0.5 * (vp1 + vm1);
  const Complex even2 = 0.5 * (vp2 + vm2);
  const Complex limit = (4.0 * even1 - even2) / 3.0;
  const Complex d1 = (8.0 * (vp1 - vm1) - (vp2 - vm2)) / (12.0 * h);
  const Complex d2 =
      (16.0 * even1 - even2 - 15.0 * limit) * 2.0 / (12.0 * h * h);
  return limit + d * d1 + 0.5 * d * d * d2;
}

}  // namespace

Complex z_x_plus_k(Complex s, const FamilyParamK& kk) {
  const double k = kk.k;
  if (std::abs(k - 1.0) < 1e-12) {
    const Complex g = gamma(1.0 + 0.5 * s);
    return gamma(1.0 + s) / (g * g);
  }
  if (k < 1.0) {
    return specfun::gauss_2f1(-0.5 * s, -0.5 * s, 1.0, k * k);
  }
  return std::pow(Complex(k), s) *
         specfun::gauss_2f1(-0.5 * s, -0.5 * s, 1.0, 1.0 / (k * k));
}

Complex zd_xy(Complex s) {
  if (std::abs(s + 4.0) < 1e-12) throw PoleError("zd_xy: pole at s = -4");
  check_small_k_poles(s);
  const Complex g = gamma(2.0 + 0.5 * s);
  return 4.0 / (s + 4.0) * gamma(2.0 + s) / (g * g);
}

Complex zd_xyk(Complex s, const FamilyParamK& k) {
  if (k.k < 2.0 && near_real_odd_integer(s)) {
    return odd_s_limit([](Complex ss, double kk) { return zd_xyk_raw(ss, kk); },
                       s, k.k);
  }
  return zd_xyk_raw(s, k.k);
}

Complex z_xyk(Complex s, const FamilyParamK& k) {
  if (k.k < 2.0 && near_real_odd_integer(s)) {
    return odd_s_limit([](Complex ss, double kk) { return z_xyk_raw(ss, kk); },
                       s, k.k);
  }
  return z_xyk_raw(s, k.k);
}

double mahler_from_derivative(ZetaFunction which, const FamilyParamK& k) {
  auto eval = [&](Complex s) -> Complex {
    switch (which) {
      case ZetaFunction::zd_xy: return zd_xy(s);
      case ZetaFunction::zd_xyk: return zd_xyk(s, k);
      case ZetaFunction::z_xyk: return z_xyk(s, k);
    }
    throw DomainError("mahler_from_derivative: unknown function");
  };
  const double h1 = 1e-20, h2 = 1e-10;
  const double d1 = eval(Complex(0.0, h1)).imag() / h1;
  const double d2 = eval(Complex(0.0, h2)).imag() / h2;
  if (std::abs(d1 - d2) > 1e-6 * std::max(1.0, std::abs(d1))) {
    throw NonConvergence("mahler_from_derivative: step-size disagreement");
  }
  return d1;
}

namespace {

void check_box_off_poles(const ZeroBox& box) {
  if (box.im_min > 0.4 || box.im_max < -0.4) return;
  // Real-axis pole belt of the small-k form: negative integers <= -2.
  for (double p = -2.0; p >= box.re_min - 1.0; p -= 1.0) {
    if (p >= box.re_min && p <= box.re_max)
      throw DomainError("find_zeros: box touches the real-axis pole set");
  }
}

}  // namespace

int winding_count(const ZeroBox& box, const FamilyParamK& k) {
  box.validate();
  auto zval = [&](double re, double im) { return zd_xyk(Complex(re, im), k); };

  // Corners, counterclockwise.
  struct Edge {
    double x0, y0, x1, y1;
  };
  const Edge edges[4] = {
      {box.re_min, box.im_min, box.re_max, box.im_min},
      {box.re_max, box.im_min, box.re_max, box.im_max},
      {box.re_max, box.im_max, box.re_min, box.im_max},
      {box.re_min, box.im_max, box.re_min, box.im_min}};

  double total = 0.0;
  for (const Edge& e : edges) {
    // Recursively bisect until consecutive phase steps are small.
    struct Seg {
      double t0, t1;
      Complex v0, v1;
      int depth;
    };
    auto at = [&](double t) {
      return zval(e.x0 + t * (e.x1 - e.x0), e.y0 + t * (e.y1 - e.y0));
    };
    std::vector<Seg> stack;
    const int kInit = 64;
    Complex prev = at(0.0);
    for (int i = kInit; i >= 1; --i) {
      const double t0 = static_cast<double>(i - 1) / kInit;
      const double t1 = static_cast<double>(i) / kInit;
      stack.push_back({t0, t1, Complex(0), Complex(0), 0});
    }
    // Fill endpoint values lazily through the walk.
    std::vector<Seg> work;
    work.reserve(stack.size());
    double t_cursor = 0.0;
    Complex v_cursor = prev;
    while (!stack.empty()) {
      Seg s = stack.back();
      stack.pop_back();
      const Complex v0 = (s.t0 == t_cursor) ? v_cursor : at(s.t0);
      const Complex v1 = at(s.t1);
      if (v0 == Complex(0.0) || v1 == Complex(0.0)) {
        throw WindingMismatch("winding_count: zero on the box boundary");
      }
      const double dphi = std::arg(v1 / v0);
      if (std::abs(dphi) > 1.0 && s.depth < 40) {
        const double tm = 0.5 * (s.t0 + s.t1);
        stack.push_back({tm, s.t1, Complex(0), Complex(0), s.depth + 1});
        stack.push_back({s.t0, tm, Complex(0), Complex(0), s.depth + 1});
        continue;
      }
      total += dphi;
      t_cursor = s.t1;
      v_cursor = v1;
    }
  }
  return static_cast<int>(std::llround(total / (2.0 * kPi)));
}

std::vector<ZeroRecord> find_zeros(const ZeroBox& box, const FamilyParamK& k) {
  box.validate();
  check_box_off_poles(box);
  auto f = [&](Complex s) { return zd_xyk(s, k); };

  const int nx = std::max(
      9, static_cast<int>(std::ceil((box.re_max - box.re_min) * box.grid_density)) + 1);
  const int ny = std::max(
      9, static_cast<int>(std::ceil((box.im_max - box.im_min) * box.grid_density)) + 1);
  const double dx = (box.re_max - box.re_min) / (nx - 1);
  const double dy = (box.im_max - box.im_min) / (ny - 1);

  // |Z| on the grid, strips in parallel with a deterministic layout.
  std::vector<double> mag(static_cast<std::size_t>(nx) * ny);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int nthreads = static_cast<int>(std::min<unsigned>(hw, 8));
  auto fill = [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      for (int i = 0; i < nx; ++i) {
        const Complex s(box.re_min + i * dx, box.im_min + j * dy);
        mag[static_cast<std::size_t>(j) * nx + i] = std::abs(f(s));
      }
    }
  };
  if (nthreads <= 1 || ny < 2 * nthreads) {
    fill(0, ny);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (ny + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const int lo = t * chunk, hi = std::min(ny, lo + chunk);
      if (lo < hi) pool.emplace_back(fill, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<Complex> seeds;
  for (int j = 1; j + 1 < ny; ++j) {
    for (int i = 1; i + 1 < nx; ++i) {
      const double m = mag[static_cast<std::size_t>(j) * nx + i];
      bool is_min = true;
      for (int dj = -1; dj <= 1 && is_min; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          if (mag[static_cast<std::size_t>(j + dj) * nx + (i + di)] < m) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) seeds.emplace_back(box.re_min + i * dx, box.im_min + j * dy);
    }
  }

  std::vector<ZeroRecord> zeros;
  constexpr double kResidualTol = 1e-10;
  for (Complex s : seeds) {
    // Newton with a numerically differentiated derivative. The evaluation
    // noise floor makes the iterates bounce once |Z| is at roundoff scale,
    // so keep the best point seen instead of demanding a tiny last step.
    Complex best = s;
    double best_res = std::abs(f(s));
    for (int iter = 0; iter < 40; ++iter) {
      const Complex v = f(s);
      const double h = 1e-6 * std::max(1.0, std::abs(s));
      const Complex dv = (f(s + h) - f(s - h)) / (2.0 * h);
      if (dv == Complex(0.0)) break;
      const Complex step = v / dv;
      s -= step;
      if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) break;
      const double res = std::abs(f(s));
      if (res < best_res) {
        best_res = res;
        best = s;
      }
      if (std::abs(step) < 1e-13 * std::max(1.0, std::abs(s))) break;
      if (iter > 4 && res > 0.5 * best_res && best_res < 1e-12) break;
    }
    s = best;
    const double res = best_res;
    if (res > kResidualTol) continue;
    if (s.real() < box.re_min || s.real() > box.re_max ||
        s.imag() < box.im_min || s.imag() > box.im_max)
      continue;
    bool dup = false;
    for (const auto& z : zeros) {
      if (std::abs(z.location - s) < 1e-6) {
        dup = true;
        break;
      }
    }
    if (!dup) zeros.push_back({s, res, box});
  }
  std::sort(zeros.begin(), zeros.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    return a.location.imag() != b.location.imag()
               ? a.location.imag() < b.location.imag()
               : a.location.real() < b.location.real();
  });

  const int wind = winding_count(box, k);
  if (wind != static_cast<int>(zeros.size())) {
    throw WindingMismatch("find_zeros: winding count " + std::to_string(wind) +
                          " != zeros found " + std::to_string(zeros.size()) +
                          " (grid too coarse?)");
  }
  return zeros;
}

Complex g_big_continuation(Complex s, Complex kc) {
  if (!(kc.imag() > 0.0) && !(kc.real() > 2.0)) {
    throw DomainError("g_big_continuation: need Im(kc) > 0 or Re(kc) > 2");
  }
  // kernel(v) = kc^s 2F1(-s/2,-s/2;1;v^2/kc^2); for Im(kc) > 0 the argument
  // sits just off the [1,inf) cut, where the connection formulas continue
  // the series (the v > |kc| range lands in the logarithmic b - a = 0 case).
  auto kernel = [&](double v) -> Complex {
    if (v == 0.0) return std::pow(kc, s);
    const Complex w = v * v / (kc * kc);
    return std::pow(kc, s) * specfun::gauss_2f1(-0.5 * s, -0.5 * s, 1.0, w);
  };
  auto integrand = [&](double v) -> Complex {
    return densities::p_t1(v) * kernel(v);
  };
  quadrature::QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = 1e-12;
  spec.endpoint_rule = quadrature::EndpointRule::double_exponential;
  const double split = std::clamp(kc.real(), 0.0, 2.0);
  Complex total = 0.0;
  if (split > 0.0) {
    total += quadrature::integrate_complex(integrand, 0.0, split, spec).value;
  }
  if (split < 2.0) {
    total += quadrature::integrate_complex(integrand, split, 2.0, spec).value;
  }
  return total;
}

double zd_xyk_via_density_quadrature(double s, const FamilyParamK& kk,
                                     double tol) {
  if (!(s > -2.0)) throw DomainError("zd_xyk_via_density_quadrature: s > -2");
  const double k = kk.k;
  quadrature::QuadratureSpec inner_spec;
  inner_spec.abs_tol = inner_spec.rel_tol = 0.05 * tol;
  quadrature::QuadratureSpec outer_spec;
  outer_spec.abs_tol = outer_spec.rel_tol = 0.5 * tol;

  // int_{|k-v|}^{k+v} u^s p_cond du with u = a + (b-a) sin^2(phi): the
  // radicand factors as (u-a)(u+a)(b-u)(b+u) and the sin cos factors cancel,
  // leaving u^s (4u/pi) / sqrt((u+a)(b+u)).
  auto inner = [&](double v) {
    if (v == 0.0) return std::pow(k, s);
    const double a = std::abs(k - v), b = k + v;
    auto g = [&](double phi) {
      const double sn = std::sin(phi);
      const double u = a + (b - a) * sn * sn;
      return std::pow(u, s) * (4.0 * u / kPi) /
             std::sqrt((u + a) * (b + u));
    };
    return quadrature::integrate(g, 0.0, 0.5 * kPi, inner_spec).value;
  };
  auto outer = [&](double v) { return densities::p_t1(v) * inner(v); };
  double total = 0.0;
  const double split = std::clamp(k, 0.0, 2.0);
  if (split > 0.0) {
    total += quadrature::integrate(outer, 0.0, split, outer_spec).value;
  }
  if (split < 2.0) {
    total += quadrature::integrate(outer, split, 2.0, outer_spec).value;
  }
  return total;
}

double zd_xyk_via_continuation(double s, const FamilyParamK& k) {
  if (!(s > 0.0) || near_real_odd_integer(Complex(s))) {
    throw DomainError("zd_xyk_via_continuation: requires real s > 0, not odd");
  }
  const double cot = 1.0 / std::tan(0.5 * kPi * s);
  double vals[3];
  const double eps[3] = {1e-2, 1e-3, 1e-4};
  for (int i = 0; i < 3; ++i) {
    const Complex g = g_big_continuation(Complex(s), Complex(k.k, eps[i]));
    vals[i] = g.real() - cot * g.imag();
  }
  // eps-ladder with ratio 10: eliminate the linear then quadratic terms.
  const double r1 = (10.0 * vals[1] - vals[0]) / 9.0;
  const double r2 = (10.0 * vals[2] - vals[1]) / 9.0;
  return (100.0 * r2 - r1) / 99.0;
}

}  // namespace arealm::zetamahler
