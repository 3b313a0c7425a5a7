#pragma once

#include "mlw/series.hpp"
#include "mlw/specfun.hpp"

namespace mlw {

// Building blocks for the closed forms.

/// sum_{k>=1} x^k psi(k+a) / (a)_k, in closed form through the lower
/// incomplete gamma function and 2F2(a,a; a+1,a+1; -x).
double psi_pochhammer_series(double a, double x);

/// d/dx of psi_pochhammer_series. Cross-checked against a numerical
/// derivative on every call; disagreement beyond 1e-6 raises a
/// formula-discrepancy error.
double psi_pochhammer_series_dx(double a, double x);

/// sum_{k>=0} x^(k+1) / ((k+a) (a)_(k+1)) = (x/a^2) 2F2(1,a; 1+a,1+a; x), a > 0.
double shifted_pochhammer_series(double a, double x);

/// 1 iff n divides s + m.
int root_of_unity_selector(int n, int m, int s);
/// (1/n) sum_t exp(2 pi i t (s+m)/n); rounds to the selector.
double root_of_unity_average(int n, int m, int s);

struct UnityRootContext {
  int n = 1;
  int t = 0;
  Complex xi;  // exp(2 pi i t/n) x^(1/n)

  static UnityRootContext make(int n, int t, double x);
};

// Parameter derivatives at special orders. Each returns a closed-form
// Evaluation (method ClosedForm, with a short description as citation).

/// d(Ei)/d(alpha) at alpha = n, beta = -m (0 <= m < n), x > 0, through Ein
/// at the n-th roots of unity.
Evaluation integral_ml_dalpha_integer_order(int n, int m, double x);
/// The complex sum before projection; its imaginary part is rounding noise.
Complex integral_ml_dalpha_integer_order_complex(int n, int m, double x);

/// d(Ei)/d(alpha) at alpha = 1/q and any admissible beta.
Evaluation integral_ml_dalpha_reciprocal_order(int q, double beta, double x);
/// d(Ei)/d(beta) at alpha = 1/q, beta = 0.
Evaluation integral_ml_dbeta_reciprocal_order(int q, double x);
/// d(Wi)/d(alpha) at alpha = 1 and non-integer beta (2 beta not a pole), x > 0.
Evaluation integral_wright_dalpha_unit_order(double beta, double x);
/// d(E)/d(beta) at alpha = 1/q.
Evaluation ml_dbeta_reciprocal_order(int q, double beta, double x);
/// d(E)/d(alpha) at alpha = 1/q.
Evaluation ml_dalpha_reciprocal_order(int q, double beta, double x);

}  // namespace mlw
