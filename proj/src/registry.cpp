#include "mlw/registry.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

#include "mlw/error.hpp"
#include "mlw/reduction.hpp"
#include "mlw/specfun.hpp"

namespace mlw {

Rational Rational::make(long long num, long long den) {
  if (den == 0) throw MathError(ErrorKind::Domain, "rational with zero denominator");
  if (den < 0) num = -num, den = -den;
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) num /= g, den /= g;
  return {num, den};
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto to_ll = [](std::string_view s) -> std::optional<long long> {
    long long v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto n = to_ll(text.substr(0, slash)), d = to_ll(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return make(*n, *d);
  }
  if (auto n = to_ll(text)) return make(*n, 1);
  double v = 0.0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) return std::nullopt;
  return from_double(v);
}

std::optional<Rational> Rational::from_double(double v, int max_den) {
  if (!std::isfinite(v) || std::fabs(v) > 1e12) return std::nullopt;
  for (int d = 1; d <= max_den; ++d) {
    double n = std::nearbyint(v * d);
    if (static_cast<double>(static_cast<long long>(n)) / d == v) return make(static_cast<long long>(n), d);
  }
  return std::nullopt;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(const RegistryKey& key) {
  return std::string(to_string(key.family)) + "/" + std::string(to_string(key.wrt)) + "/alpha=" +
         key.alpha.str() + "/beta=" + (key.beta ? key.beta->str() : std::string("any"));
}

namespace {

constexpr double kGamma = constants::euler_gamma;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;
const double kLn4 = std::log(4.0);

double hyp(std::initializer_list<double> up, std::initializer_list<double> lo, double x) {
  return hypergeometric_pfq(std::span(up.begin(), up.size()), std::span(lo.begin(), lo.size()), x);
}

// ln x + E1(x) = ln x - Ei(-x)
double log_minus_ei_neg(double x) { return std::log(x) + e1(x); }

double lower_gamma(double a, double x) { return incomplete_gamma(IncompleteGammaKind::Lower, a, x); }

// -Gamma(b)^-1 e^x x [2F2(b,b; b+1,b+1; -x)/b^2 + psi(b) x^-b lower_gamma(b, x)]
double unit_order_general(double x, double b) {
  return -std::exp(x) * x * rgamma(b) * (hyp({b, b}, {b + 1, b + 1}, -x) / (b * b) + digamma(b) * lower_gamma_scaled(b, x));
}

double half_order_general(double x, double b) {
  double y = x * x, c = b - 0.5;
  double first = -y * rgamma(b) * (hyp({b, b}, {b + 1, b + 1}, -y) / (b * b) + digamma(b) * lower_gamma_scaled(b, y));
  double second = -rgamma(c) / x * (y * hyp({c, c}, {c + 1, c + 1}, -y) / (c * c) + digamma(c) * y * lower_gamma_scaled(c, y));
  return std::exp(y) * (first + second);
}

bool positive(double x) { return x > 0.0; }
bool inside_unit(double x) { return std::fabs(x) < 1.0; }
bool any_beta(double) { return true; }
bool not_pole(double b) { return !is_nonpositive_integer(b); }

const std::vector<double> kPositiveSamples = {0.5, 1.3, 2.5};

ClosedFormEntry entry(Family f, Wrt w, Rational a, std::optional<Rational> b,
                      std::function<double(double, double)> fn, const char* citation) {
  ClosedFormEntry e;
  e.key = {f, w, a, b};
  e.evaluator = std::move(fn);
  e.citation = citation;
  e.x_domain = "x > 0";
  e.accepts_x = positive;
  e.accepts_beta = any_beta;
  e.sample_x = kPositiveSamples;
  return e;
}

Rational R(long long n, long long d = 1) { return Rational::make(n, d); }

std::vector<ClosedFormEntry> build_entries() {
  using F = Family;
  using W = Wrt;
  std::vector<ClosedFormEntry> v;

  // ---- d(Ei)/d(alpha)
  {
    ClosedFormEntry e = entry(F::IntegralML, W::Alpha, R(0), std::nullopt,
                              [](double x, double b) { return digamma_over_gamma(b) * x / (x - 1.0); },
                              "psi(beta)/Gamma(beta) x/(x-1), geometric series");
    e.x_domain = "|x| < 1";
    e.accepts_x = inside_unit;
    e.accepts_beta = [](double b) { return b != 0.0; };
    e.sample_x = {-0.5, 0.3, 0.7};
    e.sample_beta = {0.7, 1.0, -1.5};
    v.push_back(std::move(e));
  }
  v.push_back(entry(F::IntegralML, W::Alpha, R(1), R(0),
                    [](double x, double) { return -x * std::exp(x) * log_minus_ei_neg(x); },
                    "-x e^x [ln x - Ei(-x)]"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(1), R(1),
                    [](double x, double) { return -std::exp(x) * log_minus_ei_neg(x) - kGamma; },
                    "-e^x [ln x - Ei(-x)] - gamma"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(1), R(2),
                    [](double x, double) { return 1.0 - (kGamma * (x + 1.0) + std::exp(x) * log_minus_ei_neg(x)) / x; },
                    "1 - [gamma (x+1) + e^x (ln x - Ei(-x))]/x"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(1), R(3),
                    [](double x, double) {
                      return ((3 * x + 4) * x - 2 * kGamma * ((x + 2) * x + 2) - 4 * std::exp(x) * log_minus_ei_neg(x)) /
                             (4 * x * x);
                    },
                    "[(3x+4)x - 2 gamma (x^2+2x+2) - 4 e^x (ln x - Ei(-x))]/(4x^2)"));
  {
    ClosedFormEntry e = entry(F::IntegralML, W::Alpha, R(1), std::nullopt, unit_order_general,
                              "-e^x x/Gamma(beta) [2F2(beta,beta; beta+1,beta+1; -x)/beta^2 + psi(beta) x^-beta lower_gamma(beta,x)]");
    e.accepts_beta = not_pole;
    e.sample_beta = {0.7, 2.5, -0.3};
    v.push_back(std::move(e));
  }
  v.push_back(entry(F::IntegralML, W::Alpha, R(2), R(-1),
                    [](double x, double) {
                      double s = std::sqrt(x), l = std::log(x);
                      return -(x / 4) * std::exp(-s) * (std::exp(2 * s) * (2 * e1(s) + l) - 2 * ei(s) + l);
                    },
                    "-(x/4) e^-sqrt(x) {e^(2 sqrt x) [2 E1(sqrt x) + ln x] - 2 Ei(sqrt x) + ln x}"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(2), R(0),
                    [](double x, double) {
                      double s = std::sqrt(x);
                      return s * (std::sinh(s) * (chi(s) - std::log(s)) - std::cosh(s) * shi(s));
                    },
                    "sqrt(x) [sinh sqrt(x) (Chi sqrt(x) - ln sqrt(x)) - cosh sqrt(x) Shi sqrt(x)]"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(2), R(1),
                    [](double x, double) {
                      double s = std::sqrt(x);
                      return std::cosh(s) * (chi(s) - std::log(s)) - shi(s) * std::sinh(s) - kGamma;
                    },
                    "cosh sqrt(x) [Chi sqrt(x) - ln sqrt(x)] - Shi sqrt(x) sinh sqrt(x) - gamma"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(2), R(2),
                    [](double x, double) {
                      double s = std::sqrt(x);
                      return (std::sinh(s) * (chi(s) - std::log(s)) - shi(s) * std::cosh(s)) / s + 1.0 - kGamma;
                    },
                    "[sinh sqrt(x) (Chi sqrt(x) - ln sqrt(x)) - Shi sqrt(x) cosh sqrt(x)]/sqrt(x) + 1 - gamma"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(4), R(0),
                    [](double x, double) {
                      double r = std::pow(x, 0.25), l = std::log(x);
                      return r / 8 *
                             (4 * std::sinh(r) * chi(r) + std::sin(r) * (l - 4 * ci(r)) - 4 * std::cosh(r) * shi(r) +
                              4 * std::cos(r) * si(r) - std::sinh(r) * l);
                    },
                    "(r/8)[4 sinh r Chi r + sin r (ln x - 4 Ci r) - 4 cosh r Shi r + 4 cos r Si r - sinh r ln x], r = x^(1/4)"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(4), R(-2),
                    [](double x, double) {
                      double r = std::pow(x, 0.25);
                      return std::pow(x, 0.75) / 2 *
                             (chi(r) * std::sinh(r) + ci(r) * std::sin(r) - shi(r) * std::cosh(r) - si(r) * std::cos(r) -
                              std::log(r) * (std::sin(r) + std::sinh(r)));
                    },
                    "(x^(3/4)/2)[Chi r sinh r + Ci r sin r - Shi r cosh r - Si r cos r - ln r (sin r + sinh r)], r = x^(1/4)"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(1, 2), R(1),
                    [](double x, double) {
                      double y = x * x;
                      return std::exp(y) * (-4 * x / kSqrtPi * hyp({0.5, 0.5}, {1.5, 1.5}, -y) + (kGamma + kLn4) * erf(x) +
                                            ei(-y) - 2 * std::log(x)) -
                             kGamma;
                    },
                    "e^(x^2)[-4x/sqrt(pi) 2F2(1/2,1/2; 3/2,3/2; -x^2) + (gamma + ln 4) erf x + Ei(-x^2) - 2 ln x] - gamma"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(1, 2), R(2),
                    [](double x, double) {
                      double y = x * x;
                      double inner = std::exp(-y) - ei(-y) - (kGamma - 1) * lower_gamma(2.0, y) +
                                     2 * digamma(1.5) * lower_gamma(1.5, y) / kSqrtPi + 2 * std::log(x) + kGamma - 1;
                      return -std::exp(y) * (8 * x * hyp({1.5, 1.5}, {2.5, 2.5}, -y) / (9 * kSqrtPi) + inner / y);
                    },
                    "-e^(x^2){8x 2F2(3/2,3/2; 5/2,5/2; -x^2)/(9 sqrt(pi)) + x^-2 [e^(-x^2) - Ei(-x^2) - (gamma-1) lower_gamma(2,x^2) "
                    "+ 2 psi(3/2) lower_gamma(3/2,x^2)/sqrt(pi) + 2 ln x + gamma - 1]}"));
  v.push_back(entry(F::IntegralML, W::Alpha, R(1, 2), R(3), [](double x, double) { return half_order_general(x, 3.0); },
                    "half-order any-beta form at beta = 3"));
  {
    ClosedFormEntry e = entry(F::IntegralML, W::Alpha, R(1, 2), std::nullopt, half_order_general,
                              "e^(x^2){-x^2/Gamma(b) [2F2(b,b; b+1,b+1; -x^2)/b^2 + psi(b) x^-2b lower_gamma(b,x^2)] "
                              "- 1/(x Gamma(b-1/2)) [x^2 2F2(c,c; c+1,c+1; -x^2)/c^2 + psi(c) x^(3-2b) lower_gamma(c,x^2)]}, c = b - 1/2");
    e.accepts_beta = [](double b) { return not_pole(b) && not_pole(b - 0.5); };
    e.sample_beta = {0.7, 1.25, -0.3};
    v.push_back(std::move(e));
  }

  // ---- d(Ei)/d(beta)
  v.push_back(entry(F::IntegralML, W::Beta, R(1), R(0),
                    [](double x, double) {
                      return std::exp(x) * ei(-x) + ei(x) - (std::exp(x) + 1) * std::log(x) - 2 * kGamma;
                    },
                    "e^x Ei(-x) + Ei(x) - (e^x + 1) ln x - 2 gamma"));
  v.push_back(entry(F::IntegralML, W::Beta, R(2), R(0),
                    [](double x, double) {
                      double s = std::sqrt(x);
                      return 2 * chi(s) * (std::cosh(s) + 1) - 2 * shi(s) * std::sinh(s) - std::log(x) * (std::cosh(s) + 1) -
                             4 * kGamma;
                    },
                    "2 Chi sqrt(x) (cosh sqrt(x) + 1) - 2 Shi sqrt(x) sinh sqrt(x) - ln x (cosh sqrt(x) + 1) - 4 gamma"));
  v.push_back(entry(F::IntegralML, W::Beta, R(4), R(0),
                    [](double x, double) {
                      double r = std::pow(x, 0.25);
                      return 2 * chi(r) * (std::cosh(r) + 1) + 2 * ci(r) * (std::cos(r) + 1) - 2 * shi(r) * std::sinh(r) +
                             2 * si(r) * std::sin(r) - std::log(x) / 2 * (std::cos(r) + std::cosh(r) + 2) - 8 * kGamma;
                    },
                    "2 Chi r (cosh r + 1) + 2 Ci r (cos r + 1) - 2 Shi r sinh r + 2 Si r sin r - (ln x/2)(cos r + cosh r + 2) - 8 gamma"));
  v.push_back(entry(F::IntegralML, W::Beta, R(2), R(1),
                    [](double x, double) {
                      double s = std::sqrt(x), d = std::log(s) - chi(s), sh = shi(s);
                      return x / 4 * hyp({1, 1, 1}, {2, 2, 2, 1.5}, x / 4) + d * d - sh * sh - kGamma * kGamma;
                    },
                    "(x/4) 3F4(1,1,1; 2,2,2,3/2; x/4) + (ln sqrt(x) - Chi sqrt(x))^2 - Shi^2 sqrt(x) - gamma^2"));
  v.push_back(entry(F::IntegralML, W::Beta, R(1, 2), R(0),
                    [](double x, double) {
                      double y = x * x, ey = std::exp(y);
                      double h = 2 * x / kSqrtPi * (hyp({0.5, 1}, {1.5, 1.5}, y) - ey * hyp({0.5, 0.5}, {1.5, 1.5}, -y));
                      return h + (ey * (chi(y) + (kGamma + kLn4) * erf(x) - shi(y) - 2 * std::log(x)) + chi(y) + shi(y) -
                                  2 * (kGamma + std::log(x))) /
                                     2;
                    },
                    "2x/sqrt(pi)[2F2(1/2,1; 3/2,3/2; x^2) - e^(x^2) 2F2(1/2,1/2; 3/2,3/2; -x^2)] + {e^(x^2)[Chi x^2 + "
                    "(gamma + ln 4) erf x - Shi x^2 - 2 ln x] + Chi x^2 + Shi x^2 - 2(gamma + ln x)}/2"));

  // ---- d(Wi)/d(alpha), alpha = 1; Bessel arguments are 2 sqrt(x)
  v.push_back(entry(F::IntegralWright, W::Alpha, R(1), R(0),
                    [](double x, double) {
                      double s = std::sqrt(x), z = 2 * s;
                      return (bessel_i(0, z) - s * (std::log(x) * bessel_i(1, z) - 2 * bessel_k(1, z))) / 2 - 1;
                    },
                    "[I0 - sqrt(x)(ln x I1 - 2 K1)]/2 - 1"));
  v.push_back(entry(F::IntegralWright, W::Alpha, R(1), R(1),
                    [](double x, double) {
                      double z = 2 * std::sqrt(x);
                      return -kGamma - std::log(x) / 2 * bessel_i(0, z) - bessel_k(0, z);
                    },
                    "-gamma - (ln x/2) I0 - K0"));
  v.push_back(entry(F::IntegralWright, W::Alpha, R(1), R(2),
                    [](double x, double) {
                      double s = std::sqrt(x), z = 2 * s;
                      return 1 - kGamma - bessel_i(0, z) / (2 * x) +
                             (2 * bessel_k(1, z) - std::log(x) * bessel_i(1, z)) / (2 * s);
                    },
                    "1 - gamma - I0/(2x) + (2 K1 - ln x I1)/(2 sqrt(x))"));
  v.push_back(entry(F::IntegralWright, W::Alpha, R(1), R(1, 2),
                    [](double x, double) {
                      double s = std::sqrt(x);
                      return (std::cosh(2 * s) * (chi(4 * s) - std::log(x) / 2) - shi(4 * s) * std::sinh(2 * s) + digamma(0.5)) /
                             kSqrtPi;
                    },
                    "[cosh(2 sqrt x)(Chi(4 sqrt x) - ln x/2) - Shi(4 sqrt x) sinh(2 sqrt x) + psi(1/2)]/sqrt(pi)"));
  v.push_back(entry(F::IntegralWright, W::Alpha, R(1), R(3, 2),
                    [](double x, double) {
                      double s = std::sqrt(x);
                      return (std::sinh(2 * s) * (2 * chi(4 * s) - std::log(x)) - 2 * shi(4 * s) * std::cosh(2 * s) +
                              4 * s * digamma(1.5)) /
                             (2 * kSqrtPi * s);
                    },
                    "[sinh(2 sqrt x)(2 Chi(4 sqrt x) - ln x) - 2 Shi(4 sqrt x) cosh(2 sqrt x) + 4 sqrt(x) psi(3/2)]/(2 sqrt(pi x))"));

  // ---- d(Wi)/d(beta)
  v.push_back(entry(F::IntegralWright, W::Beta, R(1), R(0),
                    [](double x, double) {
                      double z = 2 * std::sqrt(x);
                      return -kGamma - std::log(x) / 2 * bessel_i(0, z) - bessel_k(0, z) + x * hyp({1, 1}, {2, 2, 2}, x);
                    },
                    "-gamma - (ln x/2) I0 - K0 + x 2F3(1,1; 2,2,2; x)"));

  // ---- d(W)/d(beta)
  v.push_back(entry(F::Wright, W::Beta, R(1), R(0),
                    [](double x, double) {
                      double s = std::sqrt(x), z = 2 * s;
                      return (bessel_i(0, z) - s * (std::log(x) * bessel_i(1, z) - 2 * bessel_k(1, z))) / 2;
                    },
                    "[I0 - sqrt(x)(ln x I1 - 2 K1)]/2"));
  v.push_back(entry(F::Wright, W::Beta, R(1), R(1),
                    [](double x, double) {
                      double z = 2 * std::sqrt(x);
                      return -std::log(x) / 2 * bessel_i(0, z) - bessel_k(0, z);
                    },
                    "-(ln x/2) I0 - K0"));
  v.push_back(entry(F::Wright, W::Beta, R(1), R(2),
                    [](double x, double) {
                      double s = std::sqrt(x), z = 2 * s;
                      return (2 * bessel_k(1, z) - std::log(x) * bessel_i(1, z)) / (2 * s) - bessel_i(0, z) / (2 * x);
                    },
                    "(2 K1 - ln x I1)/(2 sqrt(x)) - I0/(2x)"));

  // ---- d(W)/d(alpha)
  v.push_back(entry(F::Wright, W::Alpha, R(1), R(0),
                    [](double x, double) {
                      double z = 2 * std::sqrt(x);
                      return -x * (bessel_k(0, z) + bessel_i(0, z) * std::log(x) / 2);
                    },
                    "-x [K0 + (ln x/2) I0]"));
  v.push_back(entry(F::Wright, W::Alpha, R(1), R(1),
                    [](double x, double) {
                      double s = std::sqrt(x), z = 2 * s;
                      return (s * (2 * bessel_k(1, z) - std::log(x) * bessel_i(1, z)) - bessel_i(0, z)) / 2;
                    },
                    "[sqrt(x)(2 K1 - ln x I1) - I0]/2"));
  v.push_back(entry(F::Wright, W::Alpha, R(1), R(2),
                    [](double x, double) {
                      double s = std::sqrt(x), z = 2 * s;
                      return bessel_i(0, z) / (2 * x) - bessel_i(1, z) / s - std::log(x) / 2 * bessel_i(2, z) - bessel_k(2, z);
                    },
                    "I0/(2x) - I1/sqrt(x) - (ln x/2) I2 - K2"));
  return v;
}

}  // namespace

ClosedFormRegistry::ClosedFormRegistry() : entries_(build_entries()) {}

const ClosedFormRegistry& ClosedFormRegistry::instance() {
  static const ClosedFormRegistry registry;
  return registry;
}

const ClosedFormEntry* ClosedFormRegistry::find(Family family, Wrt wrt, double alpha, double beta) const {
  auto a = Rational::from_double(alpha);
  if (!a) return nullptr;
  auto b = Rational::from_double(beta);
  const ClosedFormEntry* general = nullptr;
  for (const ClosedFormEntry& e : entries_) {
    if (e.key.family != family || e.key.wrt != wrt || e.key.alpha != *a) continue;
    if (e.key.beta) {
      if (b && *e.key.beta == *b) return &e;
    } else if (e.accepts_beta(beta)) {
      general = &e;
    }
  }
  return general;
}

const ClosedFormEntry& ClosedFormRegistry::at(const RegistryKey& key) const {
  for (const ClosedFormEntry& e : entries_)
    if (e.key.family == key.family && e.key.wrt == key.wrt && e.key.alpha == key.alpha && e.key.beta == key.beta) return e;
  throw MathError(ErrorKind::UnknownKey, "no closed form registered for " + to_string(key));
}

namespace {

Evaluation run_entry(const ClosedFormEntry& e, double x, double beta) {
  detail::require_finite(x, "closed form");
  if (!e.accepts_x(x))
    throw MathError(ErrorKind::Domain, to_string(e.key) + " needs " + e.x_domain);
  double b = e.key.beta ? e.key.beta->value() : beta;
  if (!e.key.beta && !e.accepts_beta(b))
    throw MathError(ErrorKind::Domain, to_string(e.key) + " does not admit beta = " + std::to_string(b));
  if (x == 0.0) return {0.0, 0.0, 0, Method::ClosedForm, e.citation};
  double v = e.evaluator(x, b);
  if (!std::isfinite(v)) throw MathError(ErrorKind::Overflow, to_string(e.key) + ": non-finite result");
  return {v, 64 * kEps * (1.0 + std::fabs(v)), 0, Method::ClosedForm, e.citation};
}

// Parameters where one of the general reductions applies.
std::optional<Evaluation> general_reduction(const DerivTarget& t, double alpha, double beta, double x) {
  auto a = Rational::from_double(alpha);
  if (!a) return std::nullopt;
  auto rb = Rational::from_double(beta);
  const bool reciprocal = a->num == 1;
  const int q = static_cast<int>(a->den);
  try {
    switch (t.family) {
      case Family::IntegralML:
        if (t.wrt == Wrt::Alpha) {
          if (a->is_integer() && a->num >= 1 && rb && rb->is_integer() && rb->num <= 0 && -rb->num < a->num && x > 0.0)
            return integral_ml_dalpha_integer_order(static_cast<int>(a->num), static_cast<int>(-rb->num), x);
          if (reciprocal) return integral_ml_dalpha_reciprocal_order(q, beta, x);
        } else if (reciprocal && beta == 0.0) {
          return integral_ml_dbeta_reciprocal_order(q, x);
        }
        break;
      case Family::IntegralWright:
        if (t.wrt == Wrt::Alpha && alpha == 1.0 && x > 0.0) return integral_wright_dalpha_unit_order(beta, x);
        break;
      case Family::MittagLeffler:
        if (reciprocal)
          return t.wrt == Wrt::Beta ? ml_dbeta_reciprocal_order(q, beta, x) : ml_dalpha_reciprocal_order(q, beta, x);
        break;
      case Family::Wright: break;
    }
  } catch (const MathError& e) {
    if (e.kind() == ErrorKind::Pole || e.kind() == ErrorKind::Domain) return std::nullopt;
    throw;
  }
  return std::nullopt;
}

}  // namespace

Evaluation closed_form_registry_eval(const RegistryKey& key, double x, double beta) {
  return run_entry(ClosedFormRegistry::instance().at(key), x, beta);
}

std::optional<Evaluation> closed_form(const DerivTarget& target, double alpha, double beta, double x) {
  if (const ClosedFormEntry* e = ClosedFormRegistry::instance().find(target.family, target.wrt, alpha, beta))
    if (e->accepts_x(x)) return run_entry(*e, x, beta);
  return general_reduction(target, alpha, beta, x);
}

Evaluation evaluate(const Query& q, double x, const EvalOptions& opts) {
  Params p{q.alpha, q.beta, q.family};
  validate(p, x);
  validate(opts);
  if (!q.wrt) return eval_base(p, x, opts);
  DerivTarget t{q.family, *q.wrt};
  switch (opts.method) {
    case Method::Series: return param_derivative(t, p, x, opts);
    case Method::Auto: {
      const ClosedFormEntry* e = ClosedFormRegistry::instance().find(t.family, t.wrt, q.alpha, q.beta);
      if (e && e->accepts_x(x)) return run_entry(*e, x, q.beta);
      EvalOptions series = opts;
      series.method = Method::Series;
      return param_derivative(t, p, x, series);
    }
    case Method::ClosedForm: {
      if (auto v = closed_form(t, q.alpha, q.beta, x)) return *v;
      throw MathError(ErrorKind::UnknownKey, "no closed form for d" + std::string(to_string(q.family)) + "/d" +
                                                 std::string(to_string(*q.wrt)) + " at alpha = " + std::to_string(q.alpha) +
                                                 ", beta = " + std::to_string(q.beta) + ", x = " + std::to_string(x));
    }
    case Method::Quadrature: break;
  }
  throw MathError(ErrorKind::Domain, "quadrature is available for the base integral functions only");
}

}  // namespace mlw
