#include <doctest.h>

#include <cmath>

#include "mlw/error.hpp"
#include "mlw/param_deriv.hpp"
#include "mlw/quadrature.hpp"
#include "mlw/reduction.hpp"
#include "oracles.hpp"

using namespace mlw;

namespace {

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::fabs(b); }

double series(Family f, Wrt w, double a, double b, double x) { return param_derivative({f, w}, {a, b, f}, x).value; }

}  // namespace

TEST_CASE("psi-Pochhammer building blocks") {
  CHECK(rel_close(psi_pochhammer_series(1, 1), 1.1735630272247269349, 1e-14));
  CHECK(rel_close(psi_pochhammer_series(0.5, 2), 14.765954151510032251, 1e-14));
  CHECK(rel_close(shifted_pochhammer_series(1, 1), 1.3179021514544038949, 1e-14));
  CHECK(rel_close(shifted_pochhammer_series(0.75, 1.5), 4.1174624701171089367, 1e-14));
  CHECK(rel_close(psi_pochhammer_series_dx(0.5, 1), 4.9140178351347668187, 1e-13));
  CHECK(rel_close(psi_pochhammer_series_dx(2, 2), 2.8237181132225971189, 1e-13));
  CHECK(rel_close(psi_pochhammer_series_dx(1, 0.5), 1.0775466735689825698, 1e-13));
  CHECK(psi_pochhammer_series(1.5, 0.0) == 0.0);
  CHECK_THROWS_AS(psi_pochhammer_series(-1.0, 1.0), MathError);
  CHECK_THROWS_AS(shifted_pochhammer_series(-0.5, 1.0), MathError);
}

TEST_CASE("printed x-derivative coefficient would trip the guard") {
  // (x - a - 1)/a^2 in place of (x - a + 1)/a^2
  double a = 0.5, x = 1.0;
  const double up[2] = {a, a}, lo[2] = {a + 1, a + 1};
  double f = hypergeometric_pfq(up, lo, -x), g = lower_gamma_scaled(a, x), psi = digamma(a);
  double printed = psi + std::exp(x) * ((x - a - 1) / (a * a) * f + g * ((x - a + 1) * psi + 1));
  double numeric = finite_diff([a](double t) { return psi_pochhammer_series(a, t); }, x, 0.05).value;
  CHECK(std::fabs(printed - numeric) > 1e-6 * std::fabs(numeric));
  CHECK(std::fabs(psi_pochhammer_series_dx(a, x) - numeric) <= 1e-8 * std::fabs(numeric));
}

TEST_CASE("roots of unity selector") {
  CHECK(root_of_unity_selector(3, 1, 2) == 1);
  CHECK(root_of_unity_selector(3, 1, 3) == 0);
  CHECK(std::round(root_of_unity_average(4, 2, 6)) == 1.0);
  CHECK(std::fabs(root_of_unity_average(4, 2, 5)) < 1e-15);
  CHECK_THROWS_AS(root_of_unity_selector(2, 2, 1), MathError);
  UnityRootContext c = UnityRootContext::make(4, 1, 16.0);
  CHECK(std::abs(c.xi - Complex(0.0, 2.0)) < 1e-15);
}

TEST_CASE("integer-order reduction") {
  CHECK(rel_close(integral_ml_dalpha_integer_order(1, 0, 1.0).value, -std::exp(1.0) * 0.21938393439552027368, 1e-14));
  CHECK(rel_close(integral_ml_dalpha_integer_order(3, 2, 0.8).value, 0.32645234614977039741, 1e-12));
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m < n; ++m)
      for (double x : {0.5, 1.0, 4.0}) {
        Complex v = integral_ml_dalpha_integer_order_complex(n, m, x);
        CHECK(std::fabs(v.imag()) <= 1e-10 * (1 + std::fabs(v.real())));
        CHECK(rel_close(v.real(), series(Family::IntegralML, Wrt::Alpha, n, -m, x), 1e-8));
      }
  CHECK_THROWS_AS(integral_ml_dalpha_integer_order(2, 2, 1.0), MathError);
  CHECK_THROWS_AS(integral_ml_dalpha_integer_order(2, 0, -1.0), MathError);
  CHECK(integral_ml_dalpha_integer_order(2, 1, 1.0).method == Method::ClosedForm);
}

TEST_CASE("reciprocal-order reductions") {
  for (int q = 1; q <= 3; ++q)
    for (double b : {0.5, 1.0, 2.0})
      for (double x : {0.4, 0.9, 1.7}) {
        CHECK(rel_close(ml_dbeta_reciprocal_order(q, b, x).value, series(Family::MittagLeffler, Wrt::Beta, 1.0 / q, b, x), 1e-8));
        CHECK(rel_close(ml_dalpha_reciprocal_order(q, b, x).value, series(Family::MittagLeffler, Wrt::Alpha, 1.0 / q, b, x), 1e-8));
      }
  CHECK(rel_close(integral_ml_dalpha_reciprocal_order(2, 1.0, 1.0).value, series(Family::IntegralML, Wrt::Alpha, 0.5, 1.0, 1.0), 1e-10));
  CHECK(rel_close(integral_ml_dbeta_reciprocal_order(1, 1.0).value, 0.14433912422967695991, 1e-12));
  CHECK(rel_close(integral_ml_dbeta_reciprocal_order(3, 1.7).value, series(Family::IntegralML, Wrt::Beta, 1.0 / 3, 0.0, 1.7), 1e-8));
  // beta - h/q at a pole
  CHECK_THROWS_AS(integral_ml_dalpha_reciprocal_order(2, 0.5, 1.0), MathError);
  CHECK_THROWS_AS(ml_dalpha_reciprocal_order(0, 1.0, 1.0), MathError);
}

TEST_CASE("unit-order integral Wright reduction") {
  CHECK(rel_close(integral_wright_dalpha_unit_order(0.5, 2.0).value, -1.6712315313056225304, 1e-12));
  CHECK(rel_close(integral_wright_dalpha_unit_order(1.3, 0.7).value, -0.4635518066566531283, 1e-12));
  for (double b : {0.25, 0.75, 1.5, 2.5, -0.3, -0.75, -1.25})
    for (double x : {0.6, 1.0, 2.0})
      CHECK(rel_close(integral_wright_dalpha_unit_order(b, x).value, series(Family::IntegralWright, Wrt::Alpha, 1, b, x), 1e-8));
  CHECK_THROWS_AS(integral_wright_dalpha_unit_order(1.0, 1.0), MathError);
  CHECK_THROWS_AS(integral_wright_dalpha_unit_order(-0.5, 1.0), MathError);
  CHECK_THROWS_AS(integral_wright_dalpha_unit_order(0.5, -1.0), MathError);
  // beta -> 1 approaches -gamma - K0(2) at x = 1
  double target = -oracle::d(oracle::kEuler) - 0.11389387274953343565;
  double g1 = std::fabs(integral_wright_dalpha_unit_order(1.1, 1.0).value - target);
  double g2 = std::fabs(integral_wright_dalpha_unit_order(1.01, 1.0).value - target);
  double g3 = std::fabs(integral_wright_dalpha_unit_order(1.001, 1.0).value - target);
  CHECK(g1 > g2);
  CHECK(g2 > g3);
}
