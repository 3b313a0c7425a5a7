#include <doctest.h>

#include <cmath>
#include <random>

#include "mlw/error.hpp"
#include "mlw/param_deriv.hpp"
#include "mlw/series.hpp"
#include "oracles.hpp"

using namespace mlw;

namespace {

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::fabs(b); }

Params ml(double a, double b) { return {a, b, Family::MittagLeffler}; }
Params wr(double a, double b) { return {a, b, Family::Wright}; }
Params iml(double a, double b) { return {a, b, Family::IntegralML}; }
Params iwr(double a, double b) { return {a, b, Family::IntegralWright}; }

}  // namespace

TEST_CASE("base functions at known points") {
  CHECK(rel_close(eval_mittag_leffler(ml(1, 1), 2.0).value, std::exp(2.0), 1e-15));
  CHECK(rel_close(eval_mittag_leffler(ml(2, 1), 1.5).value, std::cosh(std::sqrt(1.5)), 1e-15));
  CHECK(rel_close(eval_mittag_leffler(ml(0.7, 1.3), 1.5).value, 6.7593841214290912087, 1e-14));
  CHECK(rel_close(eval_wright(wr(-0.5, 1), -1.0).value, 0.47950012218695346232, 1e-14));
  CHECK(rel_close(eval_integral_ml(iml(1, 1), 1.0).value, 1.3179021514544038949, 1e-15));
  CHECK(rel_close(eval_integral_wright(iwr(0, 1), 1.0).value, 1.3179021514544038949, 1e-15));
  CHECK(rel_close(eval_integral_wright(iwr(1, 2), 2.0).value, 1.1866511798096225931, 1e-14));
  // alpha = 0 is the geometric series
  CHECK(rel_close(eval_mittag_leffler(ml(0, 1), 0.5).value, 2.0, 1e-15));
}

TEST_CASE("x = 0 returns the constant term") {
  CHECK(eval_mittag_leffler(ml(1.5, 2.0), 0.0).value == 1.0);
  CHECK(eval_integral_ml(iml(1.5, 2.0), 0.0).value == 0.0);
}

TEST_CASE("non-positive integer beta drops the k = 0 term") {
  for (double b : {0.0, -1.0, -2.0}) {
    Evaluation e = eval_mittag_leffler(ml(1.5, b), 1.2);
    CHECK(std::isfinite(e.value));
    CHECK(rel_close(e.value, oracle::d(oracle::mittag_leffler(1.5, b, 1.2)), 1e-13));
    CHECK(std::isfinite(eval_wright(wr(1.0, b), 1.2).value));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(eval_mittag_leffler(ml(0, 1), 1.5), MathError);
  CHECK_THROWS_AS(eval_mittag_leffler(ml(-0.5, 1), 1.0), MathError);
  CHECK_THROWS_AS(eval_mittag_leffler(ml(1, 1), NAN), MathError);
  CHECK_THROWS_AS(eval_wright(wr(-1.5, 1), 1.0), MathError);
  CHECK_THROWS_AS(eval_wright(ml(1, 1), 1.0), MathError);
  EvalOptions bad;
  bad.tol = -1;
  CHECK_THROWS_AS(eval_mittag_leffler(ml(1, 1), 1.0, bad), MathError);
  EvalOptions quad;
  quad.method = Method::Quadrature;
  CHECK_THROWS_AS(eval_mittag_leffler(ml(1, 1), 1.0, quad), MathError);
  try {
    eval_mittag_leffler(ml(0, 1), 1.5);
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("term cap reports non-convergence") {
  EvalOptions tight;
  tight.max_terms = 8;
  try {
    eval_mittag_leffler(ml(1, 1), 3.0, tight);
    CHECK(false);
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::NonConvergence);
  }
}

TEST_CASE("overflow is reported, not returned") {
  try {
    eval_mittag_leffler(ml(0.1, 1), 5.0);
    CHECK(false);
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("series and quadrature agree for the integral functions") {
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> a(0.3, 3.0), b(0.2, 3.0), x(0.01, 3.0);
  EvalOptions quad;
  quad.method = Method::Quadrature;
  for (int i = 0; i < 50; ++i) {
    Params p{a(rng), b(rng), (i % 2) ? Family::IntegralML : Family::IntegralWright};
    double xv = x(rng);
    double s = eval_base(p, xv).value, q = eval_base(p, xv, quad).value;
    CHECK(rel_close(q, s, 1e-8));
  }
}

TEST_CASE("error estimate bounds the true error") {
  struct Case {
    Family f;
    double a, b, x;
  };
  const Case cases[] = {{Family::MittagLeffler, 0.7, 1.3, 1.5}, {Family::MittagLeffler, 0.5, 1.0, -4.0},
                        {Family::Wright, -0.5, 1.0, -1.0},       {Family::Wright, 1.5, -0.5, 5.0},
                        {Family::IntegralML, 1.0, 1.0, 1.0},      {Family::IntegralML, 0.8, -1.2, -4.5},
                        {Family::IntegralWright, 1.0, 2.0, 2.0},  {Family::IntegralWright, 2.5, 0.0, 3.0}};
  for (const Case& c : cases) {
    Evaluation e = eval_base({c.a, c.b, c.f}, c.x);
    oracle::quad ref = c.f == Family::MittagLeffler ? oracle::mittag_leffler(c.a, c.b, c.x)
                       : c.f == Family::Wright      ? oracle::wright(c.a, c.b, c.x)
                       : c.f == Family::IntegralML  ? oracle::integral_ml(c.a, c.b, c.x)
                                                    : oracle::integral_wright(c.a, c.b, c.x);
    CHECK(std::fabs(e.value - oracle::d(ref)) <= 10 * e.abs_err_est);
  }
}

TEST_CASE("parameter derivative fixtures") {
  auto d = [](Family f, Wrt w, double a, double b, double x) { return param_derivative({f, w}, {a, b, f}, x).value; };
  CHECK(rel_close(d(Family::Wright, Wrt::Beta, 1, 1, 1), -0.11389387274953343565, 1e-13));
  CHECK(rel_close(d(Family::IntegralML, Wrt::Alpha, 3, -2, 0.8), 0.32645234614977039741, 1e-13));
  CHECK(rel_close(d(Family::IntegralWright, Wrt::Alpha, 1, 1, 1), -0.69110953765106629626, 1e-13));
  CHECK(rel_close(d(Family::Wright, Wrt::Alpha, 1, 1, 1), -0.99992676935151120643, 1e-13));
  CHECK(rel_close(d(Family::IntegralML, Wrt::Alpha, 2, 1, 1), -0.52680190444559686339, 1e-13));
  CHECK(rel_close(d(Family::IntegralML, Wrt::Beta, 1, 0, 1), 0.14433912422967695991, 1e-13));
  CHECK(rel_close(d(Family::IntegralWright, Wrt::Alpha, 1, 0.5, 2), -1.6712315313056225304, 1e-13));
  CHECK(rel_close(d(Family::IntegralWright, Wrt::Alpha, 1, 1.3, 0.7), -0.4635518066566531283, 1e-13));
}

TEST_CASE("parameter derivatives against quad-precision series") {
  struct Shape {
    Family f;
    Wrt w;
    int k0;
    bool fact;
    int p;
  };
  const Shape shapes[] = {{Family::MittagLeffler, Wrt::Alpha, 1, false, 1}, {Family::MittagLeffler, Wrt::Beta, 0, false, 0},
                          {Family::Wright, Wrt::Alpha, 1, true, 1},         {Family::Wright, Wrt::Beta, 0, true, 0},
                          {Family::IntegralML, Wrt::Alpha, 1, false, 0},    {Family::IntegralML, Wrt::Beta, 1, false, -1},
                          {Family::IntegralWright, Wrt::Alpha, 1, true, 0}, {Family::IntegralWright, Wrt::Beta, 1, true, -1}};
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> a(0.5, 3.0), b(-1.5, 2.5), x(-2.0, 3.0);
  for (const Shape& s : shapes) {
    for (int i = 0; i < 10; ++i) {
      double av = a(rng), bv = b(rng), xv = x(rng);
      Evaluation e = param_derivative({s.f, s.w}, {av, bv, s.f}, xv);
      double ref = oracle::d(oracle::family_series(av, bv, xv, s.k0, s.fact, s.p, true));
      CHECK(std::fabs(e.value - ref) <= 10 * e.abs_err_est + 1e-300);
    }
  }
}

TEST_CASE("beta derivative passes through the poles of Gamma") {
  // d/dbeta of 1/Gamma(beta) at beta = 0 is 1, at beta = -1 is -1
  CHECK(rel_close(param_derivative({Family::MittagLeffler, Wrt::Beta}, ml(1, 0), 0.0).value, 1.0, 1e-15));
  CHECK(rel_close(param_derivative({Family::MittagLeffler, Wrt::Beta}, ml(1, -1), 0.0).value, -1.0, 1e-15));
}

TEST_CASE("interrelation of the Wright derivatives") {
  for (double b : {0.0, 1.0, 0.5, -1.0}) {
    CheckResult c = deriv_interrelation_check(1.0, b, 2.0);
    CHECK(c.pass);
  }
  CheckResult c0 = deriv_interrelation_check(1.0, 0.0, 2.0);
  double wb = param_derivative({Family::Wright, Wrt::Beta}, wr(1, 0), 2.0).value;
  CHECK(rel_close(c0.lhs, wb - 1.0, 1e-12));
}

TEST_CASE("param_derivative sums only") {
  EvalOptions closed;
  closed.method = Method::ClosedForm;
  CHECK_THROWS_AS(param_derivative({Family::IntegralML, Wrt::Alpha}, iml(1, 1), 1.0, closed), MathError);
}
