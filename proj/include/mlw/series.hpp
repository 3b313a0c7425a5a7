#pragma once

#include <string>
#include <string_view>

namespace mlw {

enum class Family { MittagLeffler, Wright, IntegralML, IntegralWright };

enum class Method { Auto, Series, ClosedForm, Quadrature };

std::string_view to_string(Family f);
std::string_view to_string(Method m);

struct Params {
  double alpha = 1.0;
  double beta = 1.0;
  Family family = Family::MittagLeffler;
};

/// Throws a domain error unless the parameters are admissible for the family.
void validate(const Params& p);
/// Parameter check plus the x-restriction of the geometric (alpha = 0) case.
void validate(const Params& p, double x);

struct EvalOptions {
  double tol = 1e-15;
  int max_terms = 10000;
  Method method = Method::Auto;
};

void validate(const EvalOptions& o);

struct Evaluation {
  double value = 0.0;
  double abs_err_est = 0.0;
  int terms_used = 0;
  Method method = Method::Series;
  std::string citation;  // set when a closed form produced the value
};

Evaluation eval_mittag_leffler(const Params& p, double x, const EvalOptions& opts = {});
Evaluation eval_wright(const Params& p, double x, const EvalOptions& opts = {});
/// Series by default; Method::Quadrature integrates (E(t) - 1/Gamma(beta))/t.
Evaluation eval_integral_ml(const Params& p, double x, const EvalOptions& opts = {});
Evaluation eval_integral_wright(const Params& p, double x, const EvalOptions& opts = {});

/// Dispatches on p.family.
Evaluation eval_base(const Params& p, double x, const EvalOptions& opts = {});

}  // namespace mlw
