#include "arealm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace arealm::quadrature {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename Value>
double vabs(const Value& v) {
  return std::abs(v);
}

template <typename Value>
bool vfinite(const Value& v) {
  if constexpr (std::is_same_v<Value, double>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

template <typename Value, typename F>
void gk15(const F& f, double a, double b, Value& result, double& abserr,
          long& evals) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);

  const Value fc = f(centr);
  if (!vfinite(fc)) throw DomainError("integrate: non-finite evaluation");
  Value resg = kWg[3] * fc;
  Value resk = kWgk[7] * fc;
  evals += 15;
  Value fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double absc = hlgth * kXgk[j];
    fv1[j] = f(centr - absc);
    fv2[j] = f(centr + absc);
    if (!vfinite(fv1[j]) || !vfinite(fv2[j]))
      throw DomainError("integrate: non-finite evaluation");
    const Value fsum = fv1[j] + fv2[j];
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    resk += kWgk[j] * fsum;
  }
  result = resk * hlgth;
  abserr = vabs((resk - resg) * hlgth);
  // QUADPACK-style rescaling so the estimate tracks the Kronrod error.
  double resasc = kWgk[7] * vabs(fc - resk * 0.5);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (vabs(fv1[j] - resk * 0.5) + vabs(fv2[j] - resk * 0.5));
  }
  resasc *= std::abs(hlgth);
  if (resasc != 0.0 && abserr != 0.0) {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
}

template <typename Value>
struct Segment {
  double a, b;
  Value value;
  double err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

template <typename Value, typename F>
BasicIntegralResult<Value> adaptive_gk(const F& f, double a, double b,
                                       const QuadratureSpec& spec) {
  BasicIntegralResult<Value> out;
  std::priority_queue<Segment<Value>> heap;
  Segment<Value> s0{a, b, Value{}, 0.0};
  gk15<Value>(f, a, b, s0.value, s0.err, out.evaluations);
  Value total = s0.value;
  double toterr = s0.err;
  heap.push(s0);
  int splits = 0;
  while (toterr > std::max(spec.abs_tol, spec.rel_tol * vabs(total)) &&
         splits < spec.max_subdivisions) {
    Segment<Value> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; keep its contribution.
      toterr -= worst.err;
      continue;
    }
    Segment<Value> left{worst.a, mid, Value{}, 0.0};
    Segment<Value> right{mid, worst.b, Value{}, 0.0};
    gk15<Value>(f, left.a, left.b, left.value, left.err, out.evaluations);
    gk15<Value>(f, right.a, right.b, right.value, right.err, out.evaluations);
    total += left.value + right.value - worst.value;
    toterr += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++splits;
  }
  out.value = total;
  out.err_estimate = toterr;
  out.converged = toterr <= std::max(spec.abs_tol, spec.rel_tol * vabs(total));
  return out;
}

// Tanh-sinh rule on [a, b] with progressive level doubling. Abscissa offsets
// from the endpoints are computed in exponential form, so integrable endpoint
// singularities (x^{-1/2}, log x) are sampled without cancellation.
template <typename Value, typename F>
BasicIntegralResult<Value> tanh_sinh(const F& f, double a, double b,
                                     const QuadratureSpec& spec) {
  BasicIntegralResult<Value> out;
  const double half = 0.5 * (b - a);
  constexpr double kTmax = 4.3;
  constexpr int kMaxLevel = 11;
  constexpr double kPiHalf = 1.57079632679489661923;

  auto node = [&](double t, double& x, double& w) {
    const double u = kPiHalf * std::sinh(t);
    const double eu = std::exp(-2.0 * std::abs(u));
    // 1 - |tanh(u)| = 2 e^{-2|u|} / (1 + e^{-2|u|})
    const double dist = 2.0 * eu / (1.0 + eu);
    if (t >= 0.0) {
      x = b - half * dist;
    } else {
      x = a + half * dist;
    }
    const double ch = std::cosh(u);
    w = kPiHalf * std::cosh(t) / (ch * ch);
  };

  auto eval = [&](double t) -> Value {
    double x, w;
    node(t, x, w);
    if (x <= a || x >= b) return Value{};
    const Value v = f(x);
    if (!vfinite(v)) throw DomainError("integrate: non-finite evaluation");
    return w * v;
  };

  double h = 1.0;
  Value sum = eval(0.0);
  ++out.evaluations;
  for (int k = 1; k * h <= kTmax; ++k) {
    sum += eval(k * h) + eval(-k * h);
    out.evaluations += 2;
  }
  Value prev = sum * (half * h);
  double err = std::abs(vabs(prev));
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    Value add{};
    for (int k = 1; k * h <= kTmax; k += 2) {
      add += eval(k * h) + eval(-k * h);
      out.evaluations += 2;
    }
    sum = sum + add;
    const Value cur = sum * (half * h);
    err = vabs(cur - prev);
    prev = cur;
    const double goal = std::max(spec.abs_tol, spec.rel_tol * vabs(cur));
    if (level >= 3 && err <= goal) {
      out.value = cur;
      out.err_estimate = std::max(err, 1e-16 * vabs(cur));
      out.converged = true;
      return out;
    }
  }
  out.value = prev;
  out.err_estimate = err;
  out.converged = false;
  return out;
}

// Shanks/Wynn epsilon extrapolation of a partial-sum sequence whose tail is
// a mixture of geometric components (the situation for bisection cascades
// toward an algebraic or logarithmic endpoint singularity). Returns the best
// even-column entry together with a consistency-based error estimate.
template <typename Value>
Value wynn_epsilon(const std::vector<Value>& sums, double& err) {
  const std::size_t n = sums.size();
  std::vector<Value> prev(n + 1, Value{});  // epsilon_{-1} = 0
  std::vector<Value> cur = sums;            // epsilon_0
  Value best = sums.back();
  err = (n >= 2) ? vabs(sums[n - 1] - sums[n - 2]) : vabs(best);
  Value prev_cand{};
  bool have_prev_cand = false;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Value> next(n - k);
    for (std::size_t i = 0; i + k < n; ++i) {
      const Value diff = cur[i + 1] - cur[i];
      // Once differences sit at roundoff the sequence has converged;
      // extending the table would only amplify noise.
      if (vabs(diff) <= 4e-16 * (vabs(cur[i + 1]) + vabs(cur[i])) + 1e-300) {
        if (k == 1) {
          err = vabs(diff);
          return cur[i + 1];
        }
        return best;
      }
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    if (k % 2 == 0 && next.size() >= 2) {
      // Judge an even column by its internal agreement and, past the first,
      // by agreement with the previous extrapolated column.
      const Value cand = next.back();
      double est = 2.0 * vabs(cand - next[next.size() - 2]);
      if (have_prev_cand) est += vabs(cand - prev_cand);
      if (est < err) {
        err = est;
        best = cand;
      }
      prev_cand = cand;
      have_prev_cand = true;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (cur.size() < 2) break;
  }
  return best;
}

// Integrable endpoint singularities: geometric bisection toward both
// endpoints; each side's partial sums are epsilon-extrapolated, so the mass
// below the deepest strip is supplied by the extrapolation and no abscissa
// closer to an endpoint than ~2^-30 of the interval is ever evaluated.
template <typename Value, typename F>
BasicIntegralResult<Value> endpoint_cascade(const F& f, double a, double b,
                                            const QuadratureSpec& spec) {
  BasicIntegralResult<Value> out;
  const double w = b - a;
  QuadratureSpec strip_spec = spec;
  strip_spec.endpoint_rule = EndpointRule::smooth;
  // Deep strips span few representable points; a small split budget keeps
  // their error reports honest without burning evaluations there.
  strip_spec.max_subdivisions = 30;
  strip_spec.abs_tol = 1e-3 * spec.abs_tol;
  strip_spec.rel_tol = 0.01 * spec.rel_tol;

  auto mid = adaptive_gk<Value>(f, a + 0.25 * w, b - 0.25 * w, strip_spec);
  Value total = mid.value;
  double err = mid.err_estimate;
  out.evaluations = mid.evaluations;

  constexpr int kStrips = 36;
  for (int side = 0; side < 2; ++side) {
    const double c = 0.25 * w;
    std::vector<Value> partial;
    partial.reserve(kStrips);
    Value side_sum{};
    for (int j = 0; j < kStrips; ++j) {
      const double d_hi = c * std::pow(0.5, j);
      const double d_lo = 0.5 * d_hi;
      const double lo = (side == 0) ? a + d_lo : b - d_hi;
      const double hi = (side == 0) ? a + d_hi : b - d_lo;
      if (!(lo < hi)) break;
      auto res = adaptive_gk<Value>(f, lo, hi, strip_spec);
      out.evaluations += res.evaluations;
      err += res.err_estimate;
      side_sum += res.value;
      partial.push_back(side_sum);
      // Fast-converging sides need no extrapolation depth.
      if (j >= 10 && vabs(res.value) < 1e-3 * spec.abs_tol) break;
    }
    if (partial.empty()) continue;
    double side_err = 0.0;
    const Value side_total = wynn_epsilon(partial, side_err);
    total += side_total;
    err += side_err;
  }
  out.value = total;
  out.err_estimate = std::max(err, 4e-16 * vabs(total));
  out.converged = err <= std::max(spec.abs_tol, spec.rel_tol * vabs(total));
  return out;
}

template <typename Value, typename F>
BasicIntegralResult<Value> dispatch(const F& f, double a, double b,
                                    const QuadratureSpec& spec) {
  spec.validate();
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (a == b) return {};
  switch (spec.endpoint_rule) {
    case EndpointRule::smooth:
      return adaptive_gk<Value>(f, a, b, spec);
    case EndpointRule::sqrt_singular:
    case EndpointRule::log_singular:
      return endpoint_cascade<Value>(f, a, b, spec);
    case EndpointRule::double_exponential:
      return tanh_sinh<Value>(f, a, b, spec);
  }
  throw DomainError("integrate: unknown endpoint rule");
}

}  // namespace

IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureSpec& spec) {
  return dispatch<double>(f, a, b, spec);
}

ComplexIntegralResult integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec) {
  return dispatch<std::complex<double>>(f, a, b, spec);
}

IntegralResult integrate_2d(const std::function<double(double, double)>& f,
                            const Rectangle& region,
                            const QuadratureSpec& spec) {
  spec.validate();
  QuadratureSpec inner = spec;
  inner.abs_tol = 0.25 * spec.abs_tol / std::max(1.0, region.y_max - region.y_min);
  inner.rel_tol = 0.1 * spec.rel_tol;
  long evals = 0;
  double max_inner_err = 0.0;
  auto outer_f = [&](double y) {
    auto res = dispatch<double>([&](double x) { return f(x, y); },
                                region.x_min, region.x_max, inner);
    evals += res.evaluations;
    max_inner_err = std::max(max_inner_err, res.err_estimate);
    return res.value;
  };
  auto outer = dispatch<double>(outer_f, region.y_min, region.y_max, spec);
  outer.evaluations += evals;
  outer.err_estimate += max_inner_err * (region.y_max - region.y_min);
  return outer;
}

}  // namespace arealm::quadrature
