#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "mlw/error.hpp"
#include "mlw/specfun.hpp"

namespace mlw {
namespace {

constexpr double kLnSqrt2Pi = 0.91893853320467274178032973640562;
constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;

// Factorials 0!..170!, built in extended precision so every entry is the
// correctly rounded double.
const std::array<double, 171>& factorial_table() {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    long double f = 1.0L;
    t[0] = 1.0;
    for (int k = 1; k <= 170; ++k) {
      f *= k;
      t[k] = static_cast<double>(f);
    }
    return t;
  }();
  return table;
}

// Lanczos approximation (g = 607/128, 14 terms) of Gamma on [1, 2].
double lanczos_gamma_1_2(double z) {
  static constexpr double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = z;
  double tmp = z + 5.24218750000000000;
  double ser = 0.999999999999997092;
  for (double c : cof) ser += c / ++y;
  return kSqrt2Pi * ser / z * std::pow(tmp, z + 0.5) * std::exp(-tmp);
}

// Stirling correction lnGamma(z) - [(z-1/2) ln z - z + ln sqrt(2 pi)], z >= 10.
double stirling_correction(double z) {
  static constexpr double c[8] = {1.0 / 12,       -1.0 / 360,  1.0 / 1260,  -1.0 / 1680,
                                  1.0 / 1188,     -691.0 / 360360, 1.0 / 156, -3617.0 / 122400};
  double r = 1.0 / z, r2 = r * r, s = 0.0, p = r;
  for (double ck : c) {
    s += ck * p;
    p *= r2;
  }
  return s;
}

double gamma_positive(double z) {
  if (z == std::floor(z) && z <= 171.0) return factorial_table()[static_cast<int>(z) - 1];
  if (z >= 10.0) {
    if (z > 171.7) throw MathError(ErrorKind::Overflow, "gamma: argument " + std::to_string(z));
    // z^(z-1/2) split in two so the power itself never overflows.
    double half = std::pow(z, 0.5 * (z - 0.5));
    double g = half * std::exp(-z) * half * kSqrt2Pi * std::exp(stirling_correction(z));
    if (!std::isfinite(g)) throw MathError(ErrorKind::Overflow, "gamma: argument " + std::to_string(z));
    return g;
  }
  if (z < 1.0) return lanczos_gamma_1_2(z + 1.0) / z;
  double scale = 1.0;
  while (z > 2.0) {
    z -= 1.0;
    scale *= z;
  }
  return scale * lanczos_gamma_1_2(z);
}

double log_gamma_positive(double z) {
  if (z >= 10.0) return (z - 0.5) * std::log(z) - z + kLnSqrt2Pi + stirling_correction(z);
  return std::log(gamma_positive(z));
}

void check_pole(double z, const char* who) {
  detail::require_finite(z, who);
  if (is_nonpositive_integer(z))
    throw MathError(ErrorKind::Pole, std::string(who) + " at " + std::to_string(z));
}

}  // namespace

double sin_pi(double x) {
  if (x == std::floor(x)) return std::copysign(0.0, x);
  double r = std::remainder(x, 2.0);  // in [-1, 1]
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(constants::pi * r);
}

double cos_pi(double x) {
  double r = std::fabs(std::remainder(x, 2.0));  // in [0, 1]
  if (r == 0.5) return 0.0;
  return std::sin(constants::pi * (0.5 - r));
}

bool is_nonpositive_integer(double z) { return z <= 0.0 && z == std::floor(z); }

double gamma(double z) {
  check_pole(z, "gamma");
  if (z >= 0.5) return gamma_positive(z);
  double s = sin_pi(z);
  if (1.0 - z < 170.0) {
    double g = constants::pi / (s * gamma_positive(1.0 - z));
    if (!std::isfinite(g)) throw MathError(ErrorKind::Overflow, "gamma near a pole");
    return g;
  }
  double lg = std::log(constants::pi / std::fabs(s)) - log_gamma_positive(1.0 - z);
  return std::copysign(std::exp(lg), s);
}

double log_gamma(double z) {
  check_pole(z, "log_gamma");
  if (z >= 0.5) return log_gamma_positive(z);
  return std::log(constants::pi / std::fabs(sin_pi(z))) - log_gamma_positive(1.0 - z);
}

double digamma(double z) {
  check_pole(z, "digamma");
  if (z <= 0.0) return digamma(1.0 - z) - constants::pi * cos_pi(z) / sin_pi(z);
  CompensatedSum shift;
  while (z < 10.0) {
    shift.add(-1.0 / z);
    z += 1.0;
  }
  double r2 = 1.0 / (z * z);
  double tail =
      r2 * (1.0 / 12 -
            r2 * (1.0 / 120 -
                  r2 * (1.0 / 252 -
                        r2 * (1.0 / 240 - r2 * (1.0 / 132 - r2 * (691.0 / 32760 - r2 / 12))))));
  shift.add(std::log(z));
  shift.add(-0.5 / z);
  shift.add(-tail);
  return shift.value();
}

double Scaled::value() const {
  if (mantissa == 0.0) return 0.0;
  double v = (log_scale < 700.0) ? mantissa * std::exp(log_scale)
                                 : std::copysign(std::exp(log_scale + std::log(std::fabs(mantissa))), mantissa);
  if (!std::isfinite(v)) throw MathError(ErrorKind::Overflow, "scaled value exceeds double range");
  return v;
}

Scaled scaled_rgamma(double z) {
  detail::require_finite(z, "rgamma");
  if (z >= 0.5) return {1.0, -log_gamma_positive(z)};
  // 1/Gamma(z) = Gamma(1-z) sin(pi z)/pi
  return {sin_pi(z) / constants::pi, log_gamma_positive(1.0 - z)};
}

Scaled scaled_digamma_over_gamma(double z) {
  detail::require_finite(z, "digamma_over_gamma");
  if (z >= 0.5) return {digamma(z), -log_gamma_positive(z)};
  // psi(z)/Gamma(z) = Gamma(1-z) [psi(1-z) sin(pi z)/pi - cos(pi z)], finite at the poles.
  return {digamma(1.0 - z) * sin_pi(z) / constants::pi - cos_pi(z), log_gamma_positive(1.0 - z)};
}

double rgamma(double z) { return scaled_rgamma(z).value(); }

double digamma_over_gamma(double z) { return scaled_digamma_over_gamma(z).value(); }

double pochhammer(double a, int k) {
  if (k < 0) throw MathError(ErrorKind::Domain, "pochhammer: negative k");
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + j;
  return p;
}

double exp_polynomial(int k, double x) {
  if (k < 0) throw MathError(ErrorKind::Domain, "exp_polynomial: negative degree");
  detail::require_finite(x, "exp_polynomial");
  CompensatedSum s;
  double t = 1.0;
  s.add(t);
  for (int n = 1; n <= k; ++n) {
    t *= x / n;
    s.add(t);
  }
  return s.value();
}

// ---------------------------------------------------------------- incomplete gamma

namespace {

// sum_{n>=0} x^n / (a (a+1) ... (a+n)), all terms positive for a, x > 0
double lower_series_sum(double a, double x) {
  CompensatedSum s;
  StopRule stop(1e-17);
  double t = 1.0 / a;
  s.add(t);
  for (int n = 1; n < 100000; ++n) {
    t *= x / (a + n);
    s.add(t);
    if (stop.update(t, s.value())) return s.value();
  }
  throw MathError(ErrorKind::NonConvergence, "lower incomplete gamma series");
}

// Continued fraction for e^x x^-a Gamma(a, x) (modified Lentz), good for x > a+1.
double upper_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= 1e-16) return h;
  }
  throw MathError(ErrorKind::NonConvergence, "upper incomplete gamma continued fraction");
}

}  // namespace

double incomplete_gamma(IncompleteGammaKind kind, double a, double x) {
  detail::require_finite(a, "incomplete_gamma");
  detail::require_finite(x, "incomplete_gamma");
  if (a <= 0.0) throw MathError(ErrorKind::Domain, "incomplete_gamma: a must be positive");
  if (x < 0.0) throw MathError(ErrorKind::Domain, "incomplete_gamma: x must be non-negative");
  bool lower = kind == IncompleteGammaKind::Lower;
  if (x == 0.0) return lower ? 0.0 : gamma(a);
  double prefactor = std::exp(a * std::log(x) - x);
  if (x < a + 1.0) {
    double g = prefactor * lower_series_sum(a, x);
    return lower ? g : gamma(a) - g;
  }
  double G = prefactor * upper_cf(a, x);
  return lower ? gamma(a) - G : G;
}

double lower_gamma_scaled(double a, double x) {
  detail::require_finite(a, "lower_gamma_scaled");
  detail::require_finite(x, "lower_gamma_scaled");
  if (is_nonpositive_integer(a)) throw MathError(ErrorKind::Pole, "lower_gamma_scaled at a = " + std::to_string(a));
  if (x == 0.0) return 1.0 / a;
  if (x > 0.0) {
    if (a > 0.0) return std::exp(-x) * lower_series_sum(a, x);
    // g(a) = (x g(a+1) + e^-x)/a climbs back to positive a.
    return (x * lower_gamma_scaled(a + 1.0, x) + std::exp(-x)) / a;
  }
  // x < 0: (-x)^k = |x|^k, only the finitely many k < -a carry a negative sign.
  CompensatedSum s;
  StopRule stop(1e-17);
  double y = -x, p = 1.0;
  s.add(1.0 / a);
  for (int k = 1; k < 100000; ++k) {
    p *= y / k;
    double t = p / (a + k);
    s.add(t);
    if (a + k > 0.0 && stop.update(t, s.value())) return s.value();
  }
  throw MathError(ErrorKind::NonConvergence, "lower_gamma_scaled series");
}

}  // namespace mlw
