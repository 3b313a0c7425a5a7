#pragma once

#include <string>

namespace mlw {

// One comparison between two independently computed numbers.
struct CheckResult {
  std::string id;
  std::string citation;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// pass iff rel_err <= tol (abs_err when rhs is exactly 0); non-finite sides always fail.
CheckResult make_check(std::string id, std::string citation, double lhs, double rhs, double tol);

}  // namespace mlw
