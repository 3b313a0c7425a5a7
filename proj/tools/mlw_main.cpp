// mlw: point evaluation, grid export and validation runs.
//
// Exit codes: 0 success, 1 evaluation failure or failed checks,
// 2 bad flags, out-of-domain input or unknown names.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlw/error.hpp"
#include "mlw/registry.hpp"
#include "mlw/validation.hpp"

namespace {

using namespace mlw;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

const std::map<std::string, Family> kFamilyNames = {
    {"E", Family::MittagLeffler}, {"W", Family::Wright}, {"Ei", Family::IntegralML}, {"Wi", Family::IntegralWright}};
const std::map<std::string, Method> kMethodNames = {
    {"auto", Method::Auto}, {"series", Method::Series}, {"closed", Method::ClosedForm}, {"quadrature", Method::Quadrature}};

// Accepts "1/2" as well as plain decimals.
double parse_real(const std::string& text, const char* flag) {
  if (auto r = Rational::parse(text)) return r->value();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(v))
    throw MathError(ErrorKind::Domain, std::string(flag) + ": cannot read '" + text + "' as a real number");
  return v;
}

bool is_usage_error(ErrorKind k) { return k == ErrorKind::Domain || k == ErrorKind::Pole || k == ErrorKind::UnknownKey; }

int report_error(const MathError& e) {
  std::fprintf(stderr, "mlw: %s\n", e.what());
  return is_usage_error(e.kind()) ? kUsage : kFailed;
}

struct TargetFlags {
  std::string fn = "E";
  std::string wrt = "none";
  std::string beta = "1";
  std::string method = "auto";
  double tol = 1e-15;

  Query query(double alpha) const {
    Query q;
    q.family = kFamilyNames.at(fn);
    if (wrt == "alpha") q.wrt = Wrt::Alpha;
    if (wrt == "beta") q.wrt = Wrt::Beta;
    q.alpha = alpha;
    q.beta = parse_real(beta, "--beta");
    return q;
  }
  EvalOptions options() const {
    EvalOptions o;
    o.tol = tol;
    o.method = kMethodNames.at(method);
    return o;
  }
};

void add_target_flags(CLI::App* cmd, TargetFlags& t) {
  cmd->add_option("--fn", t.fn, "function family")->check(CLI::IsMember({"E", "W", "Ei", "Wi"}));
  cmd->add_option("--wrt", t.wrt, "parameter to differentiate by")->check(CLI::IsMember({"none", "alpha", "beta"}));
  cmd->add_option("--beta", t.beta, "beta (decimal or p/q)");
  cmd->add_option("--tol", t.tol, "series relative tolerance");
  cmd->add_option("--method", t.method, "evaluation path")->check(CLI::IsMember({"auto", "series", "closed", "quadrature"}));
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_eval(const TargetFlags& t, const std::string& alpha, const std::string& x) {
  Evaluation e = evaluate(t.query(parse_real(alpha, "--alpha")), parse_real(x, "--x"), t.options());
  std::printf("value        %#.16g\n", e.value);
  std::printf("abs_err_est  %.3e\n", e.abs_err_est);
  std::printf("terms        %d\n", e.terms_used);
  std::printf("method       %s\n", std::string(to_string(e.method)).c_str());
  if (e.method == Method::ClosedForm) std::printf("citation     %s\n", e.citation.c_str());
  return kOk;
}

struct Range {
  double lo, hi;
  int count;

  double at(int i) const { return lo + (hi - lo) * i / (count - 1); }
  void check(const char* name) const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi) || count < 2)
      throw MathError(ErrorKind::Domain, std::string(name) + " range needs lo < hi and count >= 2");
  }
};

struct GridFlags {
  double x_lo = 0.05, x_hi = 5.0;
  int x_count = 100;
  double a_lo = 0.5, a_hi = 5.0;
  int a_count = 50;
  std::optional<std::string> alpha;  // fixed alpha instead of a range
  std::string out;
};

int cmd_grid(const TargetFlags& t, const GridFlags& g) {
  Range xs{g.x_lo, g.x_hi, g.x_count};
  xs.check("x");
  std::vector<double> alphas;
  if (g.alpha) {
    alphas.push_back(parse_real(*g.alpha, "--alpha"));
  } else {
    Range as{g.a_lo, g.a_hi, g.a_count};
    as.check("alpha");
    for (int i = 0; i < as.count; ++i) alphas.push_back(as.at(i));
  }
  EvalOptions opts = t.options();
  validate(opts);
  // Reject the whole grid before writing anything if a point is out of domain.
  for (double a : alphas) {
    Query q = t.query(a);
    for (int i = 0; i < xs.count; ++i) validate(Params{q.alpha, q.beta, q.family}, xs.at(i));
  }

  std::ostringstream csv;
  csv << "x,alpha,beta,value,abs_err_est,method\n";
  for (double a : alphas) {
    Query q = t.query(a);
    for (int i = 0; i < xs.count; ++i) {
      double x = xs.at(i);
      Evaluation e = evaluate(q, x, opts);
      csv << g17(x) << ',' << g17(a) << ',' << g17(q.beta) << ',' << g17(e.value) << ',' << g17(e.abs_err_est) << ','
          << to_string(e.method) << '\n';
    }
  }
  if (g.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(g.out);
    if (!(f << csv.str())) throw MathError(ErrorKind::Domain, "cannot write " + g.out);
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const std::string& report_path) {
  ValidationReport r = run_suite(suite);
  if (!report_path.empty()) write_json(r, report_path);
  for (const CheckResult& c : r.checks)
    if (!c.pass) std::printf("FAIL %s  lhs=%s rhs=%s tol=%.1e\n", c.id.c_str(), g17(c.lhs).c_str(), g17(c.rhs).c_str(), c.tol);
  std::printf("%s: %zu checks, %zu passed, %zu failed (%.2f s)\n", r.suite.c_str(), r.checks.size(), r.passed(), r.failed(),
              r.wall_seconds);
  return r.all_passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mittag-Leffler and Wright functions and their parameter derivatives"};
  app.require_subcommand(1);

  TargetFlags eval_t;
  std::string eval_alpha = "1", eval_x;
  CLI::App* eval = app.add_subcommand("eval", "evaluate at one point");
  add_target_flags(eval, eval_t);
  eval->add_option("--alpha", eval_alpha, "alpha (decimal or p/q)");
  eval->add_option("--x", eval_x, "argument")->required();

  TargetFlags grid_t;
  GridFlags grid_g;
  CLI::App* grid = app.add_subcommand("grid", "CSV over an (alpha, x) grid");
  add_target_flags(grid, grid_t);
  grid->add_option("--x-lo", grid_g.x_lo);
  grid->add_option("--x-hi", grid_g.x_hi);
  grid->add_option("--x-count", grid_g.x_count);
  grid->add_option("--alpha-lo", grid_g.a_lo);
  grid->add_option("--alpha-hi", grid_g.a_hi);
  grid->add_option("--alpha-count", grid_g.a_count);
  grid->add_option("--alpha", grid_g.alpha, "fixed alpha instead of a range");
  grid->add_option("--out", grid_g.out, "output file (default stdout)");

  std::string suite, report;
  CLI::App* verify = app.add_subcommand("verify", "run a validation suite");
  verify->add_option("--suite", suite, "relations, theorems, tables, sums, decay or all")->required();
  verify->add_option("--report", report, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_t, eval_alpha, eval_x);
    if (*grid) return cmd_grid(grid_t, grid_g);
    return cmd_verify(suite, report);
  } catch (const MathError& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "mlw: %s\n", e.what());
    return kFailed;
  }
}
