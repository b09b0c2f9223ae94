#include "arealm/modular.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace arealm::modular {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

int chi4(std::int64_t n) {
  const std::int64_t r = ((n % 4) + 4) % 4;
  if (r == 1) return 1;
  if (r == 3) return -1;
  return 0;
}

}  // namespace

Complex eta(Complex tau) {
  if (!(tau.imag() > 0.0)) throw DomainError("eta: requires Im(tau) > 0");
  Complex factor = 1.0;
  for (int guard = 0; guard < 200 && tau.imag() < 0.5; ++guard) {
    const double n = std::round(tau.real());
    if (n != 0.0) {
      tau -= n;
      factor *= std::polar(1.0, kPi * n / 12.0);
    }
    if (tau.imag() >= 0.5) break;
    // |tau| < 1 after the shift, so inversion raises Im(tau).
    const Complex sigma = -1.0 / tau;
    factor *= std::sqrt(Complex(0.0, -1.0) * sigma);
    tau = sigma;
  }
  const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * tau);
  Complex prod = 1.0;
  Complex qn = q;
  for (int n = 1; n < 200; ++n) {
    prod *= 1.0 - qn;
    if (std::abs(qn) < 1e-19) break;
    qn *= q;
  }
  return factor * std::exp(Complex(0.0, kPi / 12.0) * tau) * prod;
}

Complex x_of_tau(Complex tau) {
  const Complex e2 = eta(2.0 * tau);
  const Complex e4 = eta(4.0 * tau);
  const Complex e8 = eta(8.0 * tau);
  const Complex r = e2 * e8 * e8 / (e4 * e4 * e4);
  const Complex r2 = r * r;
  return 16.0 * r2 * r2;
}

ModularPoint solve_tk(const FamilyParamK& kk) {
  const double k = kk.k;
  if (!(k > 0.0) || !(k < 4.0)) throw DomainError("solve_tk: requires 0 < k < 4");
  auto x_at = [](double t) {
    return x_of_tau(Complex(0.0, 1.0 / (4.0 * t))).real();
  };
  // x(i/(4t)) increases from 0 to 4 as t runs over (0, inf).
  double lo = 1.0, hi = 1.0;
  int guard = 0;
  while (x_at(lo) > k) {
    lo *= 0.5;
    if (++guard > 1500) throw NonConvergence("solve_tk: bracket failure (low)");
  }
  guard = 0;
  while (x_at(hi) < k) {
    hi *= 2.0;
    if (++guard > 60) throw NonConvergence("solve_tk: bracket failure (high)");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (x_at(mid) < k) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t = 0.5 * (lo + hi);
  if (std::abs(x_at(t) - k) > 1e-12) {
    throw NonConvergence("solve_tk: residual above 1e-12");
  }
  return {t, std::exp(-kPi * t), k};
}

double c0_qseries(const ModularPoint& pt, int terms, double* tail_bound) {
  if (terms < 1) throw DomainError("c0_qseries: terms >= 1 required");
  const double q = pt.q_k;
  double sum = 0.0;
  double qn = 1.0;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    double a = 0.0;
    for (int d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      const int e = n / d;
      // divisor pair (d, f=e) and, when distinct, (e, f=d)
      if (e % 2 == 1)
        a += static_cast<double>(d) / e * ((d % 2 == 1) ? 1.0 : -1.0) * chi4(e);
      if (d != e && d % 2 == 1)
        a += static_cast<double>(e) / d * ((e % 2 == 1) ? 1.0 : -1.0) * chi4(d);
    }
    sum += a * qn;
  }
  if (tail_bound) {
    // |A(n)| <= n * (number of divisors) <= n^2; geometric envelope.
    const double n1 = terms + 1.0;
    *tail_bound = 16.0 / kPi * n1 * n1 * std::pow(q, n1) / (1.0 - q) * 3.0;
  }
  return 16.0 / kPi * sum;
}

int c0_qseries_suggested_terms(const ModularPoint& pt) {
  const double q = pt.q_k;
  if (!(q > 0.0) || !(q < 1.0)) throw DomainError("c0_qseries: invalid q_k");
  return std::max(8, static_cast<int>(std::ceil(std::log(1e-16) / std::log(q))));
}

Complex c0_lattice(const ModularPoint& pt, const LatticeCutoff& cutoff) {
  const int M = cutoff.max_abs_index;
  const double t = pt.t_k;

  // Odd m slices in parallel; per-slice totals reduced in fixed order.
  std::vector<int> ms;
  for (int m = -M; m <= M; ++m) {
    if (m % 2 != 0) ms.push_back(m);
  }
  std::vector<Complex> slice(ms.size());
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const int m = ms[i];
      // e^{-2 pi i m / 4} for odd m: -i when m = 1 mod 4, +i when m = 3 mod 4.
      const Complex phase =
          (((m % 4) + 4) % 4 == 1) ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
      Complex acc = 0.0;
      for (int n = -M; n <= M; ++n) {
        if (n % 2 == 0) continue;
        const Complex den(static_cast<double>(n), m * t);
        acc += 1.0 / (den * den);
      }
      slice[i] = phase * acc / static_cast<double>(m);
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t nth = std::min<std::size_t>(ms.size(), hw);
  if (nth <= 1) {
    run(0, ms.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (ms.size() + nth - 1) / nth;
    for (std::size_t ti = 0; ti < nth; ++ti) {
      const std::size_t lo = ti * chunk, hi = std::min(ms.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  Complex total = 0.0;
  for (const Complex& s : slice) total += s;
  return Complex(0.0, 8.0 / (kPi * kPi * kPi)) * total;
}

std::vector<std::int64_t> eisenstein_coeffs(int n_max) {
  if (n_max < 1) throw DomainError("eisenstein_coeffs: n_max >= 1");
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_max) + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t a = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const int f = n / d;
      a += static_cast<std::int64_t>(d) * d * ((f % 2 == 0) ? 1 : -1) * chi4(f);
    }
    out[static_cast<std::size_t>(n)] = (n % 2 == 0 ? a : -a);
  }
  return out;
}

namespace {

using Series = std::vector<std::int64_t>;

Series mul(const Series& a, const Series& b, int n_max) {
  Series r(static_cast<std::size_t>(n_max) + 1, 0);
  for (int i = 0; i <= n_max; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n_max; ++j) {
      r[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

// prod_{n>=1} (1 - q^{scale n}) truncated at q^{n_max}.
Series euler_product(int scale, int n_max) {
  Series f(static_cast<std::size_t>(n_max) + 1, 0);
  f[0] = 1;
  for (int n = 1; scale * n <= n_max; ++n) {
    Series g(static_cast<std::size_t>(n_max) + 1, 0);
    g[0] = 1;
    g[static_cast<std::size_t>(scale * n)] = -1;
    f = mul(f, g, n_max);
  }
  return f;
}

Series power(Series base, int exp, int n_max) {
  Series r(static_cast<std::size_t>(n_max) + 1, 0);
  r[0] = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base, n_max);
  return r;
}

Series inverse(const Series& f, int n_max) {
  Series inv(static_cast<std::size_t>(n_max) + 1, 0);
  inv[0] = 1;  // f[0] must be 1
  for (int i = 1; i <= n_max; ++i) {
    std::int64_t s = 0;
    for (int j = 1; j <= i; ++j) {
      s += f[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(i - j)];
    }
    inv[static_cast<std::size_t>(i)] = -s;
  }
  return inv;
}

}  // namespace

std::vector<std::int64_t> eta_quotient_coeffs(int n_max) {
  if (n_max < 1) throw DomainError("eta_quotient_coeffs: n_max >= 1");
  // (eta(4t)^4 eta(t)^2 / eta(2t)^3)^2
  //   = q prod (1-q^{4n})^8 (1-q^n)^4 (1-q^{2n})^{-6}
  const int n = n_max;  // after the q^1 shift the products are needed to q^{n-1}
  Series a = power(euler_product(4, n), 8, n);
  Series b = power(euler_product(1, n), 4, n);
  Series c = inverse(power(euler_product(2, n), 6, n), n);
  Series prod = mul(mul(a, b, n), c, n);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_max) + 1, 0);
  for (int i = 1; i <= n_max; ++i) {
    out[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

}  // namespace arealm::modular
