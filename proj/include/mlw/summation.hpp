#pragma once

#include <cmath>
#include <limits>

namespace mlw {

// Neumaier's variant of Kahan summation: also correct when the incoming term
// is larger than the running sum.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct SeriesControl {
  double tol = 1e-15;
  int max_terms = 10000;
};

// Result of an adaptively truncated series.
struct SeriesResult {
  double value = 0.0;
  double abs_err = 0.0;
  int terms = 0;
};

// Stopping rule shared by every series: three consecutive terms each below
// tol*|partial sum|. Structural zeros (reciprocal gamma at a pole) are fed as
// `neutral` and neither advance nor reset the run.
class StopRule {
 public:
  explicit StopRule(double tol) : tol_(tol) {}

  bool update(double term, double partial_sum, bool neutral = false) {
    if (neutral) return run_ >= 3;
    if (std::fabs(term) <= tol_ * std::fabs(partial_sum) || (term == 0.0 && partial_sum == 0.0))
      ++run_;
    else
      run_ = 0;
    return run_ >= 3;
  }

 private:
  double tol_;
  int run_ = 0;
};

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace mlw
