#pragma once

#include <functional>

namespace mlw {

struct QuadratureResult {
  double value = 0.0;
  double abs_err = 0.0;
  int evaluations = 0;
  bool converged = false;  // false: tolerance not met within the subdivision budget
};

/// Adaptive 15-point Gauss-Kronrod. b < a is allowed and flips the sign.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, double rel_tol = 0.0, int max_subdivisions = 2000);

/// Same, but raises a non-convergence error instead of returning a flagged result.
QuadratureResult integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol = 0.0,
                                    int max_subdivisions = 2000);

struct FiniteDiffResult {
  double value = 0.0;
  double abs_err = 0.0;
};

/// First derivative by central differences, Richardson-extrapolated over a
/// shrinking step sequence starting at h (Ridders' scheme).
FiniteDiffResult finite_diff(const std::function<double(double)>& f, double x0, double h);

}  // namespace mlw
