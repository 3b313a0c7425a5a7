#pragma once

#include <complex>
#include <numbers>
#include <span>

#include "mlw/summation.hpp"

namespace mlw {

using Complex = std::complex<double>;

namespace constants {
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double pi = std::numbers::pi;
}  // namespace constants

// sin(pi x), cos(pi x) with exact reduction; sin_pi is exactly 0 at integers.
double sin_pi(double x);
double cos_pi(double x);

bool is_nonpositive_integer(double z);

double gamma(double z);
/// ln|Gamma(z)|
double log_gamma(double z);
/// 1/Gamma(z); zero at the poles.
double rgamma(double z);
double digamma(double z);
/// psi(z)/Gamma(z), continuous through the poles: (-1)^(m+1) m! at z = -m.
double digamma_over_gamma(double z);

// mantissa * exp(log_scale). Lets series terms keep large/small factors in
// the exponent until the very end.
struct Scaled {
  double mantissa = 0.0;
  double log_scale = 0.0;
  double value() const;
};

Scaled scaled_rgamma(double z);
Scaled scaled_digamma_over_gamma(double z);

enum class IncompleteGammaKind { Lower, Upper };

double incomplete_gamma(IncompleteGammaKind kind, double a, double x);

/// x^(-a) * lower incomplete gamma(a, x), i.e. sum (-x)^k / (k! (a+k)).
/// Entire in x; needs only a off the non-positive integers.
double lower_gamma_scaled(double a, double x);

enum class ExpIntKind { Ei, E1, Ein, Si, Ci, Shi, Chi };

double exp_integral(ExpIntKind kind, double x);
/// Only Ein and E1 (principal branch) accept complex arguments.
Complex exp_integral(ExpIntKind kind, Complex z);

double ein(double x);
Complex ein(Complex z);
double e1(double x);
Complex e1(Complex z);
double ei(double x);
double si(double x);
double ci(double x);
double shi(double x);
double chi(double x);

enum class BesselKind { I, K };

double bessel_modified(BesselKind kind, double nu, double x);
inline double bessel_i(double nu, double x) { return bessel_modified(BesselKind::I, nu, x); }
inline double bessel_k(double nu, double x) { return bessel_modified(BesselKind::K, nu, x); }

/// pFq(upper; lower; x). The regularized form divides term k by
/// prod Gamma(b_j + k) instead of prod (b_j)_k and is total in the b_j.
double hypergeometric_pfq(std::span<const double> upper, std::span<const double> lower, double x,
                          bool regularized = false, const SeriesControl& ctl = {});
SeriesResult hypergeometric_pfq_series(std::span<const double> upper, std::span<const double> lower,
                                       double x, bool regularized = false,
                                       const SeriesControl& ctl = {});

/// Truncated exponential series sum_{n<=k} x^n/n!.
double exp_polynomial(int k, double x);
double pochhammer(double a, int k);
double erf(double x);

}  // namespace mlw
