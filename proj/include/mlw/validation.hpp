#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mlw/check.hpp"

namespace mlw {

struct ValidationReport {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by id
  double wall_seconds = 0.0;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool all_passed() const { return failed() == 0; }
};

/// Sorts the checks by id and stamps the suite name.
ValidationReport make_report(std::string suite, std::vector<CheckResult> checks, double wall_seconds = 0.0);

/// relations, theorems, tables, sums, decay; "all" runs every one of them.
/// Unknown names raise an unknown-key error. Failing checks are data, not errors.
ValidationReport run_suite(std::string_view name);
const std::vector<std::string>& suite_names();

// The check sets the suites are assembled from. Random point sets come from
// a fixed seed, so every call returns the same checks.
namespace checks {

std::vector<CheckResult> param_finite_difference(int points_per_target = 20);
std::vector<CheckResult> integral_relations();
std::vector<CheckResult> x_weighting();
std::vector<CheckResult> interrelation();
std::vector<CheckResult> log_case_quadrature();
std::vector<CheckResult> integer_order_reduction();
std::vector<CheckResult> general_reductions();
std::vector<CheckResult> building_blocks();
std::vector<CheckResult> registry();
std::vector<CheckResult> sum_identities();
std::vector<CheckResult> large_alpha_decay();

}  // namespace checks

/// Flat JSON document: suite, checks (id, citation, lhs, rhs, abs_err,
/// rel_err, tol, pass), summary, wall_time. Non-finite numbers become null.
std::string to_json(const ValidationReport& report);
void write_json(const ValidationReport& report, const std::string& path);

}  // namespace mlw
