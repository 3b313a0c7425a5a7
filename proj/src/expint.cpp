#include <cmath>
#include <string>

#include "mlw/error.hpp"
#include "mlw/specfun.hpp"

namespace mlw {
namespace {

constexpr double kGamma = constants::euler_gamma;

template <class T>
double abs_of(T v) {
  return std::abs(v);
}

// Compensated complex accumulator.
struct ComplexSum {
  CompensatedSum re, im;
  void add(Complex v) {
    re.add(v.real());
    im.add(v.imag());
  }
  Complex value() const { return {re.value(), im.value()}; }
};

// Ein(z) = sum_{k>=1} (-1)^(k+1) z^k / (k k!)
Complex ein_series(Complex z) {
  ComplexSum s;
  Complex p = 1.0;  // (-1)^(k+1) z^k / k!
  int stall = 0;
  for (int k = 1; k < 20000; ++k) {
    p *= -z / static_cast<double>(k);
    Complex t = -p / static_cast<double>(k);
    s.add(t);
    if (std::abs(t) <= 1e-17 * std::abs(s.value()))
      ++stall;
    else
      stall = 0;
    if (stall >= 3) return s.value();
  }
  throw MathError(ErrorKind::NonConvergence, "Ein series");
}

// E1 continued fraction (modified Lentz); converges for Re z > 0 away from 0.
template <class T>
T e1_cf(T z) {
  constexpr double tiny = 1e-300;
  T b = z + 1.0;
  T c = 1.0 / tiny;
  T d = 1.0 / b;
  T h = d;
  for (int i = 1; i < 20000; ++i) {
    double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (abs_of(d) < tiny) d = tiny;
    d = 1.0 / d;
    c = b + an / c;
    if (abs_of(c) < tiny) c = tiny;
    T del = c * d;
    h *= del;
    if (abs_of(del - 1.0) <= 1e-16) return h * std::exp(-z);
  }
  throw MathError(ErrorKind::NonConvergence, "E1 continued fraction");
}

void require_positive(double x, const char* who) {
  detail::require_finite(x, who);
  if (!(x > 0.0)) throw MathError(ErrorKind::Domain, std::string(who) + " requires x > 0");
}

}  // namespace

double ein(double x) {
  detail::require_finite(x, "Ein");
  if (x == 0.0) return 0.0;
  if (x > 2.0) return e1_cf(x) + kGamma + std::log(x);
  if (x < 0.0) {
    // all terms share the sign: Ein(-y) = -sum y^k/(k k!)
    double y = -x, p = 1.0;
    CompensatedSum s;
    StopRule stop(1e-17);
    for (int k = 1; k < 20000; ++k) {
      p *= y / k;
      double t = -p / k;
      s.add(t);
      if (stop.update(t, s.value())) return s.value();
    }
    throw MathError(ErrorKind::NonConvergence, "Ein series");
  }
  return ein_series(Complex(x, 0.0)).real();
}

Complex ein(Complex z) {
  detail::require_finite(z.real(), "Ein");
  detail::require_finite(z.imag(), "Ein");
  if (z == 0.0) return 0.0;
  if (z.real() >= 0.0 && std::abs(z) > 4.0) return e1_cf(z) + kGamma + std::log(z);
  if (z.imag() == 0.0) return ein(z.real());
  return ein_series(z);
}

double e1(double x) {
  require_positive(x, "E1");
  if (x <= 1.5) return ein(x) - kGamma - std::log(x);
  return e1_cf(x);
}

Complex e1(Complex z) {
  detail::require_finite(z.real(), "E1");
  detail::require_finite(z.imag(), "E1");
  if (z.imag() == 0.0 && z.real() <= 0.0)
    throw MathError(ErrorKind::Domain, "E1 on the branch cut (-inf, 0]");
  if (z.real() > 0.0 && std::abs(z) > 4.0) return e1_cf(z);
  return ein(z) - kGamma - std::log(z);
}

double ei(double x) {
  detail::require_finite(x, "Ei");
  if (x == 0.0) throw MathError(ErrorKind::Domain, "Ei(0) is singular");
  if (x < 0.0) return -e1(-x);
  CompensatedSum s;
  StopRule stop(1e-17);
  s.add(kGamma);
  s.add(std::log(x));
  double p = 1.0;
  for (int k = 1; k < 20000; ++k) {
    p *= x / k;
    double t = p / k;
    s.add(t);
    if (stop.update(t, s.value())) return s.value();
  }
  throw MathError(ErrorKind::NonConvergence, "Ei series");
}

double shi(double x) {
  detail::require_finite(x, "Shi");
  CompensatedSum s;
  StopRule stop(1e-17);
  double x2 = x * x, p = x;  // x^(2k+1)/(2k+1)!
  s.add(p);
  for (int k = 1; k < 20000; ++k) {
    p *= x2 / ((2.0 * k) * (2.0 * k + 1));
    double t = p / (2 * k + 1);
    s.add(t);
    if (stop.update(t, s.value())) return s.value();
  }
  throw MathError(ErrorKind::NonConvergence, "Shi series");
}

double chi(double x) {
  require_positive(x, "Chi");
  CompensatedSum s;
  StopRule stop(1e-17);
  s.add(kGamma);
  s.add(std::log(x));
  double x2 = x * x, p = 1.0;  // x^(2k)/(2k)!
  for (int k = 1; k < 20000; ++k) {
    p *= x2 / ((2.0 * k - 1) * (2.0 * k));
    double t = p / (2 * k);
    s.add(t);
    if (stop.update(t, s.value())) return s.value();
  }
  throw MathError(ErrorKind::NonConvergence, "Chi series");
}

double si(double x) {
  detail::require_finite(x, "Si");
  if (std::fabs(x) > 4.0) {
    double v = constants::pi / 2 + e1_cf(Complex(0.0, std::fabs(x))).imag();
    return std::copysign(v, x);
  }
  CompensatedSum s;
  StopRule stop(1e-17);
  double x2 = x * x, p = x;
  s.add(p);
  for (int k = 1; k < 20000; ++k) {
    p *= -x2 / ((2.0 * k) * (2.0 * k + 1));
    double t = p / (2 * k + 1);
    s.add(t);
    if (stop.update(t, s.value())) return s.value();
  }
  throw MathError(ErrorKind::NonConvergence, "Si series");
}

double ci(double x) {
  require_positive(x, "Ci");
  if (x > 4.0) return -e1_cf(Complex(0.0, x)).real();
  CompensatedSum s;
  StopRule stop(1e-17);
  s.add(kGamma);
  s.add(std::log(x));
  double x2 = x * x, p = 1.0;
  for (int k = 1; k < 20000; ++k) {
    p *= -x2 / ((2.0 * k - 1) * (2.0 * k));
    double t = p / (2 * k);
    s.add(t);
    if (stop.update(t, s.value())) return s.value();
  }
  throw MathError(ErrorKind::NonConvergence, "Ci series");
}

double exp_integral(ExpIntKind kind, double x) {
  switch (kind) {
    case ExpIntKind::Ei: return ei(x);
    case ExpIntKind::E1: return e1(x);
    case ExpIntKind::Ein: return ein(x);
    case ExpIntKind::Si: return si(x);
    case ExpIntKind::Ci: return ci(x);
    case ExpIntKind::Shi: return shi(x);
    case ExpIntKind::Chi: return chi(x);
  }
  throw MathError(ErrorKind::Domain, "unknown exponential integral");
}

Complex exp_integral(ExpIntKind kind, Complex z) {
  if (kind == ExpIntKind::Ein) return ein(z);
  if (kind == ExpIntKind::E1) return e1(z);
  throw MathError(ErrorKind::Domain, "only Ein and E1 accept complex arguments");
}

double erf(double x) {
  detail::require_finite(x, "erf");
  double ax = std::fabs(x);
  if (ax == 0.0) return x;
  if (ax > 6.0) return std::copysign(1.0, x);
  constexpr double two_over_sqrt_pi = 1.1283791670955125738961589031215;
  if (ax < 3.0) {
    // erf x = 2x/sqrt(pi) e^{-x^2} sum (2x^2)^n / (1*3*...*(2n+1)), positive terms
    CompensatedSum s;
    StopRule stop(1e-17);
    double t = 1.0, y = 2.0 * ax * ax;
    s.add(t);
    for (int n = 1; n < 1000; ++n) {
      t *= y / (2 * n + 1);
      s.add(t);
      if (stop.update(t, s.value())) break;
    }
    return std::copysign(two_over_sqrt_pi * ax * std::exp(-ax * ax) * s.value(), x);
  }
  // erfc x = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  constexpr double tiny = 1e-300;
  double f = ax, c = ax, d = 0.0;
  for (int n = 1; n < 1000; ++n) {
    double an = 0.5 * n;
    d = ax + an * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = ax + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = c * d;
    f *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  double erfc = 0.5 * two_over_sqrt_pi * std::exp(-ax * ax) / f;
  return std::copysign(1.0 - erfc, x);
}

}  // namespace mlw
