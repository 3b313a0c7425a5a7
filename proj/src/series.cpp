#include "mlw/series.hpp"

#include <cmath>
#include <string>

#include "mlw/detail/family_series.hpp"
#include "mlw/error.hpp"
#include "mlw/quadrature.hpp"
#include "mlw/specfun.hpp"

namespace mlw {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::MittagLeffler: return "E";
    case Family::Wright: return "W";
    case Family::IntegralML: return "Ei";
    case Family::IntegralWright: return "Wi";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Series: return "series";
    case Method::ClosedForm: return "closed";
    case Method::Quadrature: return "quadrature";
  }
  return "?";
}

namespace {

bool ml_like(Family f) { return f == Family::MittagLeffler || f == Family::IntegralML; }

}  // namespace

void validate(const Params& p) {
  detail::require_finite(p.alpha, "alpha");
  detail::require_finite(p.beta, "beta");
  if (ml_like(p.family)) {
    if (p.alpha < 0.0) throw MathError(ErrorKind::Domain, "alpha must be >= 0 for the Mittag-Leffler family");
    if (p.alpha == 0.0 && p.beta == 0.0)
      throw MathError(ErrorKind::Domain, "alpha = beta = 0 is excluded for the Mittag-Leffler family");
  } else if (!(p.alpha > -1.0)) {
    throw MathError(ErrorKind::Domain, "alpha must be > -1 for the Wright family");
  }
}

void validate(const Params& p, double x) {
  validate(p);
  detail::require_finite(x, "x");
  if (ml_like(p.family) && p.alpha == 0.0 && !(std::fabs(x) < 1.0))
    throw MathError(ErrorKind::Domain, "alpha = 0 needs |x| < 1 (geometric series)");
}

void validate(const EvalOptions& o) {
  if (!(o.tol > 0.0 && o.tol < 1.0)) throw MathError(ErrorKind::Domain, "tol must lie in (0, 1)");
  if (o.max_terms < 8) throw MathError(ErrorKind::Domain, "max_terms must be at least 8");
}

namespace detail {

SeriesResult sum_family_series(const SeriesShape& shape, double alpha, double beta, double x,
                               const SeriesControl& ctl) {
  auto coefficient = [&](double z) {
    return shape.coefficient == Coefficient::ReciprocalGamma ? scaled_rgamma(z)
                                                             : scaled_digamma_over_gamma(z);
  };
  if (x == 0.0) {
    if (shape.k_start > 0 || shape.k_power > 0) return {0.0, 0.0, 0};
    double v = shape.sign * coefficient(beta).value();
    return {v, kEps * std::fabs(v), 1};
  }
  // Every coefficient is 1/Gamma(beta) = 0: the sum is identically zero.
  if (alpha == 0.0 && shape.coefficient == Coefficient::ReciprocalGamma && is_nonpositive_integer(beta))
    return {0.0, 0.0, 0};

  const double lnx = std::log(std::fabs(x));
  const bool negative = x < 0.0;
  CompensatedSum sum;
  StopRule stop(ctl.tol);
  double err = 0.0, last = 0.0;
  int k = shape.k_start;
  for (int n = 0; n < ctl.max_terms; ++n, ++k) {
    double z = alpha * k + beta;
    Scaled c = coefficient(z);
    if (c.mantissa == 0.0) {
      if (stop.update(0.0, sum.value(), true)) return {sum.value(), std::fabs(last) + err + kEps * std::fabs(sum.value()), n + 1};
      continue;
    }
    double lf = shape.factorial ? log_gamma(k + 1.0) : 0.0;
    double lk = shape.k_power != 0 ? shape.k_power * std::log(static_cast<double>(k)) : 0.0;
    double logw = k * lnx - lf + lk + c.log_scale;
    if (logw > 709.0) throw MathError(ErrorKind::Overflow, "series term exceeds double range");
    double w = std::exp(logw);
    double t = shape.sign * c.mantissa * w;
    if (negative && (k & 1)) t = -t;
    sum.add(t);
    last = t;
    // rounding in the exponent, the mantissa and the accumulation
    double rel = kEps * (8.0 + std::fabs(k * lnx) + lf + std::fabs(lk) + std::fabs(c.log_scale));
    err += std::fabs(t) * rel;
    if (shape.coefficient == Coefficient::DigammaOverGamma)
      err += kEps * (4.0 + std::log1p(std::fabs(z))) * w;
    if (stop.update(t, sum.value()))
      return {sum.value(), std::fabs(last) + err + kEps * std::fabs(sum.value()), n + 1};
  }
  throw MathError(ErrorKind::NonConvergence,
                  "series did not meet tolerance within " + std::to_string(ctl.max_terms) + " terms");
}

}  // namespace detail

namespace {

using detail::Coefficient;
using detail::SeriesShape;

SeriesShape base_shape(Family f) {
  switch (f) {
    case Family::MittagLeffler: return {0, false, 0, Coefficient::ReciprocalGamma, 1.0};
    case Family::Wright: return {0, true, 0, Coefficient::ReciprocalGamma, 1.0};
    case Family::IntegralML: return {1, false, -1, Coefficient::ReciprocalGamma, 1.0};
    case Family::IntegralWright: return {1, true, -1, Coefficient::ReciprocalGamma, 1.0};
  }
  throw MathError(ErrorKind::Domain, "unknown family");
}

Evaluation finish(const SeriesResult& r, Method m) {
  if (!std::isfinite(r.value) || !std::isfinite(r.abs_err))
    throw MathError(ErrorKind::Overflow, "result exceeds double range");
  return {r.value, r.abs_err, r.terms, m, {}};
}

Evaluation series_eval(const Params& p, double x, const EvalOptions& opts) {
  return finish(detail::sum_family_series(base_shape(p.family), p.alpha, p.beta, x,
                                          {opts.tol, opts.max_terms}),
                Method::Series);
}

// int_0^x (F(t) - 1/Gamma(beta))/t dt with F the matching E or W; the
// removable singularity at t = 0 is patched by the first few series terms.
Evaluation quadrature_eval(const Params& p, double x, const EvalOptions& opts) {
  Params base = p;
  base.family = p.family == Family::IntegralML ? Family::MittagLeffler : Family::Wright;
  const bool wright = base.family == Family::Wright;
  const double c0 = rgamma(p.beta);
  double patch[8];
  for (int k = 1; k <= 8; ++k)
    patch[k - 1] = rgamma(p.alpha * k + p.beta) / (wright ? gamma(k + 1.0) : 1.0);
  auto integrand = [&](double t) {
    if (std::fabs(t) < 1e-4) {
      double s = 0.0;
      for (int k = 8; k >= 1; --k) s = s * t + patch[k - 1];
      return s;
    }
    return (series_eval(base, t, opts).value - c0) / t;
  };
  QuadratureResult q = integrate_or_throw(integrand, 0.0, x, 1e-15, 1e-13, 4000);
  return {q.value, q.abs_err, q.evaluations, Method::Quadrature, {}};
}

Evaluation dispatch(const Params& p, double x, const EvalOptions& opts) {
  validate(p, x);
  validate(opts);
  bool integral = p.family == Family::IntegralML || p.family == Family::IntegralWright;
  switch (opts.method) {
    case Method::Auto:
    case Method::Series: return series_eval(p, x, opts);
    case Method::Quadrature:
      if (!integral) throw MathError(ErrorKind::Domain, "quadrature applies to the integral families only");
      return quadrature_eval(p, x, opts);
    case Method::ClosedForm: break;
  }
  throw MathError(ErrorKind::UnknownKey, "no closed form for the base functions");
}

void expect_family(const Params& p, Family f) {
  if (p.family != f)
    throw MathError(ErrorKind::Domain, "params carry family " + std::string(to_string(p.family)) +
                                           ", expected " + std::string(to_string(f)));
}

}  // namespace

Evaluation eval_mittag_leffler(const Params& p, double x, const EvalOptions& opts) {
  expect_family(p, Family::MittagLeffler);
  return dispatch(p, x, opts);
}

Evaluation eval_wright(const Params& p, double x, const EvalOptions& opts) {
  expect_family(p, Family::Wright);
  return dispatch(p, x, opts);
}

Evaluation eval_integral_ml(const Params& p, double x, const EvalOptions& opts) {
  expect_family(p, Family::IntegralML);
  return dispatch(p, x, opts);
}

Evaluation eval_integral_wright(const Params& p, double x, const EvalOptions& opts) {
  expect_family(p, Family::IntegralWright);
  return dispatch(p, x, opts);
}

Evaluation eval_base(const Params& p, double x, const EvalOptions& opts) { return dispatch(p, x, opts); }

}  // namespace mlw
