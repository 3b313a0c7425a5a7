#pragma once

#include <string_view>

#include "mlw/check.hpp"
#include "mlw/series.hpp"

namespace mlw {

enum class Wrt { Alpha, Beta };

std::string_view to_string(Wrt w);

struct DerivTarget {
  Family family = Family::MittagLeffler;
  Wrt wrt = Wrt::Alpha;
};

/// d/d(alpha) or d/d(beta) of a base function, summed term by term with the
/// pole-safe psi/Gamma coefficient. The family comes from the target; the
/// one in `p` is ignored. Always sums the series (opts.method must be auto
/// or series); closed forms are reached through evaluate().
Evaluation param_derivative(const DerivTarget& t, const Params& p, double x, const EvalOptions& opts = {});

/// d(Wi)/d(alpha) against psi(beta)/Gamma(beta) + d(W)/d(beta), for any beta.
CheckResult deriv_interrelation_check(double alpha, double beta, double x, double tol = 1e-10);

}  // namespace mlw
