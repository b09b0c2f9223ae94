#include "arealm/polyroots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace arealm::polyroots {

namespace {

// Horner evaluation of p and p' at z.
void eval_poly(const std::vector<Complex>& c, Complex z, Complex& p, Complex& dp) {
  const int deg = static_cast<int>(c.size()) - 1;
  p = c[deg];
  dp = 0.0;
  for (int j = deg - 1; j >= 0; --j) {
    dp = dp * z + p;
    p = p * z + c[j];
  }
}

bool aberth(const std::vector<Complex>& c, std::vector<Complex>& z) {
  const int n = static_cast<int>(c.size()) - 1;
  // Initial guesses on a circle at the Cauchy bound, angles detuned so no
  // starting point sits on a symmetry axis of the polynomial.
  double r = 0.0;
  const double lead = std::abs(c[n]);
  for (int j = 0; j < n; ++j) r = std::max(r, std::abs(c[j]) / lead);
  r = 1.0 + r;
  z.resize(n);
  for (int i = 0; i < n; ++i) {
    const double th = 6.283185307179586 * (i + 0.25) / n + 0.42;
    z[i] = std::polar(std::min(r, 1.0 + 0.5 * i) * 0.9 + 0.1, th);
  }
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex p, dp;
      eval_poly(c, z[i], p, dp);
      if (p == Complex(0.0)) continue;
      if (dp == Complex(0.0)) {
        z[i] += Complex(1e-8, 1e-8);
        worst = 1.0;
        continue;
      }
      const Complex newton = p / dp;
      Complex repulse = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const Complex d = z[i] - z[j];
        if (d == Complex(0.0)) continue;
        repulse += 1.0 / d;
      }
      const Complex denom = 1.0 - newton * repulse;
      const Complex step = (denom == Complex(0.0)) ? newton : newton / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-14) return true;
  }
  return false;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw NonConvergence("polyroots: companion eigensolve failed");
  }
  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

}  // namespace

std::vector<Complex> roots(const std::vector<Complex>& coeffs) {
  std::vector<Complex> c = coeffs;
  while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() < 2) throw DomainError("polyroots: degree >= 1 required");

  std::vector<Complex> z;
  if (aberth(c, z)) {
    std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return z;
  }
  auto out = companion_roots(c);
  // One Newton polish per root.
  for (Complex& r : out) {
    for (int it = 0; it < 3; ++it) {
      Complex p, dp;
      eval_poly(c, r, p, dp);
      if (dp == Complex(0.0)) break;
      r -= p / dp;
    }
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace arealm::polyroots
