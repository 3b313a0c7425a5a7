#pragma once

#include "mlw/summation.hpp"

namespace mlw::detail {

enum class Coefficient { ReciprocalGamma, DigammaOverGamma };

// Term k of every series in the library is
//   sign * x^k * k^k_power / (k!)^[factorial] * C(alpha k + beta),
// summed from k_start, with C = 1/Gamma or psi/Gamma.
struct SeriesShape {
  int k_start = 0;
  bool factorial = false;
  int k_power = 0;
  Coefficient coefficient = Coefficient::ReciprocalGamma;
  double sign = 1.0;
};

SeriesResult sum_family_series(const SeriesShape& shape, double alpha, double beta, double x,
                               const SeriesControl& ctl);

}  // namespace mlw::detail
