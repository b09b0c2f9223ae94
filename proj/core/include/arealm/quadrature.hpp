#ifndef AREALM_QUADRATURE_HPP
#define AREALM_QUADRATURE_HPP

// Deterministic 1-D and nested 2-D integration: adaptive Gauss-Kronrod 7-15
// on subintervals for smooth integrands, tanh-sinh (double-exponential) for
// integrable endpoint singularities.

#include <complex>
#include <functional>

#include "arealm/errors.hpp"

namespace arealm::quadrature {

enum class EndpointRule { smooth, sqrt_singular, log_singular, double_exponential };

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
  EndpointRule endpoint_rule = EndpointRule::smooth;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw DomainError("QuadratureSpec: tolerances must be > 0");
    if (max_subdivisions < 4)
      throw DomainError("QuadratureSpec: max_subdivisions must be >= 4");
  }
};

template <typename Value>
struct BasicIntegralResult {
  Value value{};
  double err_estimate = 0.0;
  long evaluations = 0;
  // False when the tolerance was not met within the subdivision budget;
  // the best estimate is still returned.
  bool converged = true;
};

using IntegralResult = BasicIntegralResult<double>;
using ComplexIntegralResult = BasicIntegralResult<std::complex<double>>;

// Integral of f over [a, b]. Endpoint singularities (inverse square root,
// logarithmic) must be declared through spec.endpoint_rule, which switches
// to the tanh-sinh rule. Throws DomainError on a non-finite evaluation at
// an interior node.
IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureSpec& spec = {});

// Same contract for a complex-valued integrand over a real interval.
ComplexIntegralResult integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec = {});

struct Rectangle {
  double x_min, x_max, y_min, y_max;
};

// Nested 2-D integral over an axis-aligned rectangle; the inner (x) pass
// runs at a fraction of the outer tolerance.
IntegralResult integrate_2d(const std::function<double(double, double)>& f,
                            const Rectangle& region,
                            const QuadratureSpec& spec = {});

}  // namespace arealm::quadrature

#endif
