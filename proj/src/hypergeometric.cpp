#include <algorithm>
#include <cmath>
#include <string>

#include "mlw/double_double.hpp"
#include "mlw/error.hpp"
#include "mlw/specfun.hpp"

namespace mlw {

SeriesResult hypergeometric_pfq_series(std::span<const double> upper, std::span<const double> lower,
                                       double x, bool regularized, const SeriesControl& ctl) {
  detail::require_finite(x, "hypergeometric_pfq");
  for (double a : upper) detail::require_finite(a, "hypergeometric_pfq");
  for (double b : lower) detail::require_finite(b, "hypergeometric_pfq");
  const std::size_t p = upper.size(), q = lower.size();
  if (x == 0.0) {
    double v = 1.0;
    if (regularized)
      for (double b : lower) v *= rgamma(b);
    return {v, 0.0, 1};
  }
  if (p > q + 1) throw MathError(ErrorKind::Divergence, "pFq with p > q+1 diverges for x != 0");
  if (p == q + 1 && std::fabs(x) >= 1.0)
    throw MathError(ErrorKind::Domain, "pFq with p = q+1 needs |x| < 1");

  // First index at which every regularized 1/Gamma(b_j + k) is non-zero.
  int k0 = 0;
  for (double b : lower) {
    if (is_nonpositive_integer(b)) {
      if (!regularized)
        throw MathError(ErrorKind::Pole, "pFq lower parameter " + std::to_string(b) + " is a pole");
      k0 = std::max(k0, static_cast<int>(1.0 - b));
    }
  }

  // Term k0, then the ratio recurrence. Products run in double-double so
  // alternating sums keep their digits.
  DoubleDouble t = 1.0;
  for (double a : upper) t *= DoubleDouble(pochhammer(a, k0));
  t *= DoubleDouble(std::pow(x, k0)) / DoubleDouble(gamma(k0 + 1.0));
  for (double b : lower) {
    if (regularized)
      t *= DoubleDouble(rgamma(b + k0));
    else
      t /= DoubleDouble(pochhammer(b, k0));
  }

  DoubleDouble sum = t;
  double abs_sum = abs_value(t);
  StopRule stop(ctl.tol);
  int k = k0;
  for (int n = 1; n < ctl.max_terms; ++n, ++k) {
    DoubleDouble num = DoubleDouble(x), den = DoubleDouble(k + 1.0);
    for (double a : upper) num *= dd::two_sum(a, static_cast<double>(k));
    for (double b : lower) den *= dd::two_sum(b, static_cast<double>(k));
    t = t * num / den;
    sum += t;
    abs_sum += abs_value(t);
    if (stop.update(abs_value(t), double(sum)))
      return {double(sum), abs_value(t) + 4 * kEps * kEps * abs_sum + kEps * abs_value(sum), n + 1};
  }
  throw MathError(ErrorKind::NonConvergence, "pFq series hit the term cap");
}

double hypergeometric_pfq(std::span<const double> upper, std::span<const double> lower, double x,
                          bool regularized, const SeriesControl& ctl) {
  return hypergeometric_pfq_series(upper, lower, x, regularized, ctl).value;
}

}  // namespace mlw
