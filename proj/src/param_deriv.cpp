#include "mlw/param_deriv.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "mlw/detail/family_series.hpp"
#include "mlw/error.hpp"
#include "mlw/specfun.hpp"

namespace mlw {

std::string_view to_string(Wrt w) { return w == Wrt::Alpha ? "alpha" : "beta"; }

namespace {

using detail::Coefficient;
using detail::SeriesShape;

struct ShapeRow {
  Family family;
  Wrt wrt;
  SeriesShape shape;
};

// Differentiating x^k w_k / Gamma(alpha k + beta) brings down
// -psi/Gamma times k (alpha) or 1 (beta); w_k is the family's own weight.
constexpr Coefficient kPsi = Coefficient::DigammaOverGamma;
constexpr ShapeRow kShapes[] = {
    {Family::MittagLeffler, Wrt::Alpha, {1, false, 1, kPsi, -1.0}},
    {Family::MittagLeffler, Wrt::Beta, {0, false, 0, kPsi, -1.0}},
    {Family::Wright, Wrt::Alpha, {1, true, 1, kPsi, -1.0}},
    {Family::Wright, Wrt::Beta, {0, true, 0, kPsi, -1.0}},
    {Family::IntegralML, Wrt::Alpha, {1, false, 0, kPsi, -1.0}},
    {Family::IntegralML, Wrt::Beta, {1, false, -1, kPsi, -1.0}},
    {Family::IntegralWright, Wrt::Alpha, {1, true, 0, kPsi, -1.0}},
    {Family::IntegralWright, Wrt::Beta, {1, true, -1, kPsi, -1.0}},
};

const SeriesShape& shape_for(const DerivTarget& t) {
  for (const ShapeRow& r : kShapes)
    if (r.family == t.family && r.wrt == t.wrt) return r.shape;
  throw MathError(ErrorKind::Domain, "unknown derivative target");
}

}  // namespace

Evaluation param_derivative(const DerivTarget& t, const Params& p, double x, const EvalOptions& opts) {
  Params q = p;
  q.family = t.family;
  validate(q, x);
  validate(opts);
  if (opts.method != Method::Auto && opts.method != Method::Series)
    throw MathError(ErrorKind::Domain, "param_derivative sums the series; use evaluate() for other methods");
  SeriesResult r = detail::sum_family_series(shape_for(t), q.alpha, q.beta, x, {opts.tol, opts.max_terms});
  if (!std::isfinite(r.value) || !std::isfinite(r.abs_err))
    throw MathError(ErrorKind::Overflow, "result exceeds double range");
  return {r.value, r.abs_err, r.terms, Method::Series, {}};
}

CheckResult deriv_interrelation_check(double alpha, double beta, double x, double tol) {
  Params p{alpha, beta, Family::IntegralWright};
  double lhs = param_derivative({Family::IntegralWright, Wrt::Alpha}, p, x).value;
  double rhs = digamma_over_gamma(beta) + param_derivative({Family::Wright, Wrt::Beta}, p, x).value;
  char buf[96];
  std::snprintf(buf, sizeof buf, "interrelation.wi_alpha.%g.%g.%g", alpha, beta, x);
  return make_check(buf, "dWi/dalpha = psi(beta)/Gamma(beta) + dW/dbeta", lhs, rhs, tol);
}

}  // namespace mlw
