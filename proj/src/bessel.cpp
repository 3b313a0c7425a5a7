#include <cmath>
#include <string>

#include "mlw/error.hpp"
#include "mlw/specfun.hpp"

namespace mlw {
namespace {

// Ascending series sum_k (x/2)^(2k+nu) / (k! Gamma(k+nu+1)), nu not a negative integer.
double bessel_i_series(double nu, double x) {
  double h = 0.5 * x;
  Scaled r = scaled_rgamma(nu + 1.0);
  double t = r.mantissa == 0.0 ? 0.0 : r.mantissa * std::exp(nu * std::log(h) + r.log_scale);
  double q = h * h;
  CompensatedSum s;
  StopRule stop(1e-17);
  s.add(t);
  for (int k = 1; k < 20000; ++k) {
    t *= q / (k * (k + nu));
    s.add(t);
    if (stop.update(t, s.value())) return s.value();
  }
  throw MathError(ErrorKind::NonConvergence, "Bessel I series");
}

// Logarithmic-case series for integer order n >= 0.
double bessel_k_integer_series(int n, double x) {
  double h = 0.5 * x;
  double q = h * h;
  CompensatedSum s;
  if (n > 0) {
    // (1/2) (x/2)^-n sum_{k<n} (n-k-1)!/k! (-x^2/4)^k
    CompensatedSum finite;
    double hn = std::pow(h, -n);
    for (int k = 0; k < n; ++k)
      finite.add(gamma(n - k) / gamma(k + 1.0) * std::pow(-q, k));
    s.add(0.5 * hn * finite.value());
  }
  double sgn = (n % 2 == 0) ? 1.0 : -1.0;
  s.add(-sgn * std::log(h) * bessel_i_series(n, x));
  // (-1)^n (1/2) (x/2)^n sum (psi(k+1) + psi(n+k+1)) q^k / (k! (n+k)!)
  CompensatedSum tail;
  StopRule stop(1e-17);
  double p = 1.0 / gamma(n + 1.0);  // q^k / (k! (n+k)!)
  for (int k = 0; k < 20000; ++k) {
    if (k > 0) p *= q / (k * static_cast<double>(n + k));
    double t = (digamma(k + 1.0) + digamma(n + k + 1.0)) * p;
    tail.add(t);
    if (stop.update(t, tail.value())) break;
  }
  s.add(sgn * 0.5 * std::pow(h, n) * tail.value());
  return s.value();
}

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt. The integrand is even and
// analytic in a strip, so the plain trapezoid rule converges geometrically.
double bessel_k_integral(double nu, double x) {
  constexpr double h = 0.05;
  CompensatedSum s;
  s.add(0.5 * std::exp(-x));
  for (int j = 1; j < 100000; ++j) {
    double t = j * h;
    double f = std::exp(-x * std::cosh(t) + nu * t) * 0.5 * (1.0 + std::exp(-2.0 * nu * t));
    s.add(f);
    if (f < 1e-18 * s.value() && x * std::cosh(t) > nu * t + 1.0) break;
  }
  return h * s.value();
}

}  // namespace

double bessel_modified(BesselKind kind, double nu, double x) {
  detail::require_finite(nu, "bessel_modified");
  detail::require_finite(x, "bessel_modified");
  if (!(x > 0.0)) throw MathError(ErrorKind::Domain, "bessel_modified requires x > 0");
  bool integer_order = nu == std::floor(nu);
  if (kind == BesselKind::I) {
    if (integer_order && nu < 0.0) nu = -nu;  // I_{-n} = I_n
    return bessel_i_series(nu, x);
  }
  nu = std::fabs(nu);  // K is even in the order
  if (x > 2.0) return bessel_k_integral(nu, x);
  if (integer_order) return bessel_k_integer_series(static_cast<int>(nu), x);
  return 0.5 * constants::pi * (bessel_i_series(-nu, x) - bessel_i_series(nu, x)) / sin_pi(nu);
}

}  // namespace mlw
