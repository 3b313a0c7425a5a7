#include "mlw/reduction.hpp"

#include <cmath>
#include <string>

#include "mlw/error.hpp"
#include "mlw/quadrature.hpp"
#include "mlw/summation.hpp"

namespace mlw {
namespace {

constexpr double kGamma = constants::euler_gamma;

double hyp22(double a1, double a2, double b1, double b2, double x) {
  const double up[2] = {a1, a2}, lo[2] = {b1, b2};
  return hypergeometric_pfq(up, lo, x);
}

void require_shift_ok(double a, const char* who) {
  detail::require_finite(a, who);
  if (is_nonpositive_integer(a))
    throw MathError(ErrorKind::Pole, std::string(who) + ": parameter " + std::to_string(a) + " is a pole");
}

Evaluation closed(double v, const char* citation) {
  if (!std::isfinite(v)) throw MathError(ErrorKind::Overflow, std::string(citation) + ": non-finite result");
  return {v, 64 * kEps * (1.0 + std::fabs(v)), 0, Method::ClosedForm, citation};
}

void require_order(int q, const char* who) {
  if (q < 1) throw MathError(ErrorKind::Domain, std::string(who) + ": order must be a positive integer");
}

}  // namespace

double psi_pochhammer_series(double a, double x) {
  require_shift_ok(a, "psi_pochhammer_series");
  detail::require_finite(x, "psi_pochhammer_series");
  if (x == 0.0) return 0.0;
  double f = hyp22(a, a, a + 1.0, a + 1.0, -x);
  return std::exp(x) * (x * digamma(a) * lower_gamma_scaled(a, x) + x / (a * a) * f);
}

double psi_pochhammer_series_dx(double a, double x) {
  require_shift_ok(a, "psi_pochhammer_series_dx");
  detail::require_finite(x, "psi_pochhammer_series_dx");
  double psi = digamma(a);
  double f = hyp22(a, a, a + 1.0, a + 1.0, -x);
  double g = lower_gamma_scaled(a, x);
  double v = psi + std::exp(x) * ((x - a + 1.0) / (a * a) * f + g * ((x - a + 1.0) * psi + 1.0));
  FiniteDiffResult d = finite_diff([a](double t) { return psi_pochhammer_series(a, t); }, x,
                                   0.05 * std::max(1.0, std::fabs(x)));
  if (std::fabs(v - d.value) > 1e-6 * std::max(1.0, std::fabs(d.value)))
    throw MathError(ErrorKind::FormulaDiscrepancy,
                    "closed-form x-derivative " + std::to_string(v) + " vs numerical " + std::to_string(d.value));
  return v;
}

double shifted_pochhammer_series(double a, double x) {
  detail::require_finite(a, "shifted_pochhammer_series");
  detail::require_finite(x, "shifted_pochhammer_series");
  if (!(a > 0.0)) throw MathError(ErrorKind::Domain, "shifted_pochhammer_series needs a > 0");
  if (x == 0.0) return 0.0;
  return x / (a * a) * hyp22(1.0, a, 1.0 + a, 1.0 + a, x);
}

int root_of_unity_selector(int n, int m, int s) {
  if (n < 1 || m < 0 || m >= n || s < 1) throw MathError(ErrorKind::Domain, "selector needs n >= 1, 0 <= m < n, s >= 1");
  return (s + m) % n == 0 ? 1 : 0;
}

double root_of_unity_average(int n, int m, int s) {
  root_of_unity_selector(n, m, s);
  CompensatedSum re;
  for (int t = 0; t < n; ++t) re.add(cos_pi(2.0 * t * (s + m) / n));
  return re.value() / n;
}

UnityRootContext UnityRootContext::make(int n, int t, double x) {
  if (n < 1 || t < 0 || t >= n) throw MathError(ErrorKind::Domain, "root index out of range");
  if (!(x > 0.0)) throw MathError(ErrorKind::Domain, "roots of unity context needs x > 0");
  double r = std::pow(x, 1.0 / n);
  return {n, t, Complex(r * cos_pi(2.0 * t / n), r * sin_pi(2.0 * t / n))};
}

Complex integral_ml_dalpha_integer_order_complex(int n, int m, double x) {
  if (n < 1 || m < 0 || m >= n) throw MathError(ErrorKind::Domain, "integer order needs n >= 1 and 0 <= m < n");
  detail::require_finite(x, "integral_ml_dalpha_integer_order");
  if (!(x > 0.0)) throw MathError(ErrorKind::Domain, "integer order reduction needs x > 0");
  Complex sum = 0.0;
  for (int t = 0; t < n; ++t) {
    Complex xi = UnityRootContext::make(n, t, x).xi;
    Complex phase(cos_pi(2.0 * t * (m + 1) / n), sin_pi(2.0 * t * (m + 1) / n));
    sum += phase * std::exp(xi) * (ein(xi) - kGamma);
  }
  return -(std::pow(x, static_cast<double>(m + 1) / n) / n) * sum;
}

Evaluation integral_ml_dalpha_integer_order(int n, int m, double x) {
  Complex v = integral_ml_dalpha_integer_order_complex(n, m, x);
  if (std::fabs(v.imag()) > 1e-9 * (1.0 + std::fabs(v.real())))
    throw MathError(ErrorKind::ImaginaryResidue, "imaginary part " + std::to_string(v.imag()));
  return closed(v.real(), "dEi/dalpha, alpha = n, beta = -m: Ein summed over the n-th roots of unity");
}

Evaluation integral_ml_dalpha_reciprocal_order(int q, double beta, double x) {
  require_order(q, "integral_ml_dalpha_reciprocal_order");
  detail::require_finite(x, "integral_ml_dalpha_reciprocal_order");
  double xq = std::pow(x, q);
  CompensatedSum s;
  for (int h = 0; h < q; ++h) {
    double a = beta - static_cast<double>(h) / q;
    require_shift_ok(a, "integral_ml_dalpha_reciprocal_order");
    s.add(-std::pow(x, -h) * rgamma(a) * psi_pochhammer_series(a, xq));
  }
  return closed(s.value(), "dEi/dalpha, alpha = 1/q: sum of psi-Pochhammer series");
}

Evaluation integral_ml_dbeta_reciprocal_order(int q, double x) {
  require_order(q, "integral_ml_dbeta_reciprocal_order");
  detail::require_finite(x, "integral_ml_dbeta_reciprocal_order");
  double xq = std::pow(x, q);
  CompensatedSum s;
  for (int h = 0; h < q; ++h) {
    double a = 1.0 - static_cast<double>(h) / q;
    s.add(std::pow(x, -h) * rgamma(a) * (shifted_pochhammer_series(a, xq) - psi_pochhammer_series(a, xq)));
  }
  return closed(s.value() / q, "dEi/dbeta, alpha = 1/q, beta = 0: shifted minus psi-Pochhammer series");
}

Evaluation integral_wright_dalpha_unit_order(double beta, double x) {
  detail::require_finite(beta, "integral_wright_dalpha_unit_order");
  detail::require_finite(x, "integral_wright_dalpha_unit_order");
  if (beta == std::floor(beta)) throw MathError(ErrorKind::Domain, "unit-order reduction needs non-integer beta");
  if (is_nonpositive_integer(2.0 * beta)) throw MathError(ErrorKind::Domain, "unit-order reduction needs 2 beta off the poles");
  if (!(x > 0.0)) throw MathError(ErrorKind::Domain, "unit-order reduction needs x > 0");
  const double b = beta, z = 2.0 * std::sqrt(x), psi = digamma(b);
  const double up3[3] = {1.0, 1.0, 1.5}, lo3[4] = {2.0, 2.0, 2.0 - b, 1.0 + b};
  const double up2[2] = {b, 0.5 + b}, lo2[3] = {2.0 * b, 1.0 + b, 1.0 + b};
  double f34 = hypergeometric_pfq(up3, lo3, 4.0 * x);
  double f23 = hypergeometric_pfq(up2, lo2, 4.0 * x);
  CompensatedSum s;
  s.add(psi * rgamma(b));
  s.add(-std::pow(x, 0.5 * (1.0 - b)) * bessel_i(b - 1.0, z) * (psi + x / (b * (b - 1.0)) * f34));
  s.add(-gamma(1.0 - b) * rgamma(1.0 + b) / b * std::pow(x, 0.5 * (1.0 + b)) * bessel_i(1.0 - b, z) * f23);
  return closed(s.value(), "dWi/dalpha, alpha = 1, non-integer beta: Bessel I with 3F4 and 2F3");
}

Evaluation ml_dbeta_reciprocal_order(int q, double beta, double x) {
  require_order(q, "ml_dbeta_reciprocal_order");
  detail::require_finite(x, "ml_dbeta_reciprocal_order");
  double xq = std::pow(x, q);
  CompensatedSum s;
  for (int h = 0; h < q; ++h) {
    double a = static_cast<double>(h) / q + beta;
    require_shift_ok(a, "ml_dbeta_reciprocal_order");
    s.add(-std::pow(x, h) * rgamma(a) * (digamma(a) + psi_pochhammer_series(a, xq)));
  }
  return closed(s.value(), "dE/dbeta, alpha = 1/q: digamma plus psi-Pochhammer series");
}

Evaluation ml_dalpha_reciprocal_order(int q, double beta, double x) {
  require_order(q, "ml_dalpha_reciprocal_order");
  detail::require_finite(x, "ml_dalpha_reciprocal_order");
  double xq = std::pow(x, q);
  CompensatedSum s;
  for (int h = 0; h < q; ++h) {
    double a = static_cast<double>(h) / q + beta;
    require_shift_ok(a, "ml_dalpha_reciprocal_order");
    double inner = h * (digamma(a) + psi_pochhammer_series(a, xq)) + q * xq * psi_pochhammer_series_dx(a, xq);
    s.add(-std::pow(x, h) * rgamma(a) * inner);
  }
  return closed(s.value(), "dE/dalpha, alpha = 1/q: psi-Pochhammer series and its x-derivative");
}

}  // namespace mlw
