#include "mlw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "mlw/error.hpp"
#include "mlw/summation.hpp"

namespace mlw {
namespace {

constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for xgk[1], xgk[3], xgk[5], xgk[7]
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double resk = fc * wgk[7], resg = fc * wg[3];
  double fv[15];
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    double dx = h * xgk[j];
    double f1 = f(c - dx), f2 = f(c + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    resk += wgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
  }
  double mean = 0.5 * resk;
  double resasc = wgk[7] * std::fabs(fc - mean), resabs = wgk[7] * std::fabs(fc);
  for (int j = 0; j < 7; ++j) {
    resasc += wgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
    resabs += wgk[j] * (std::fabs(fv[j]) + std::fabs(fv[14 - j]));
  }
  resk *= h;
  resasc *= std::fabs(h);
  resabs *= std::fabs(h);
  double err = std::fabs((resk - resg * h));
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50 * kEps)) err = std::max(50 * kEps * resabs, err);
  return {a, b, resk, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                           double rel_tol, int max_subdivisions) {
  detail::require_finite(a, "integrate");
  detail::require_finite(b, "integrate");
  if (a == b) return {0.0, 0.0, 0, true};
  std::priority_queue<Segment> heap;
  heap.push(gk15(f, a, b));
  int evaluations = 15;
  auto totals = [&heap]() {
    auto copy = heap;
    CompensatedSum v, e;
    while (!copy.empty()) {
      v.add(copy.top().value);
      e.add(copy.top().err);
      copy.pop();
    }
    return std::pair{v.value(), e.value()};
  };
  double value = heap.top().value, err = heap.top().err;
  bool converged = err <= std::max(abs_tol, rel_tol * std::fabs(value));
  for (int n = 1; !converged && n < max_subdivisions; ++n) {
    Segment worst = heap.top();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) break;  // cannot bisect further
    heap.pop();
    heap.push(gk15(f, worst.a, mid));
    heap.push(gk15(f, mid, worst.b));
    evaluations += 30;
    std::tie(value, err) = totals();
    converged = err <= std::max(abs_tol, rel_tol * std::fabs(value));
  }
  if (!std::isfinite(value)) throw MathError(ErrorKind::Domain, "integrand is not finite");
  return {value, err, evaluations, converged};
}

QuadratureResult integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_subdivisions) {
  QuadratureResult r = integrate(f, a, b, abs_tol, rel_tol, max_subdivisions);
  if (!r.converged)
    throw MathError(ErrorKind::NonConvergence, "quadrature tolerance not met, error estimate " +
                                                   std::to_string(r.abs_err));
  return r;
}

FiniteDiffResult finite_diff(const std::function<double(double)>& f, double x0, double h) {
  detail::require_finite(x0, "finite_diff");
  if (!(h > 0.0)) throw MathError(ErrorKind::Domain, "finite_diff needs a positive step");
  constexpr int ntab = 10;
  constexpr double con = 1.4, con2 = con * con, safe = 2.0;
  double tab[ntab][ntab];
  double hh = h;
  tab[0][0] = (f(x0 + hh) - f(x0 - hh)) / (2.0 * hh);
  FiniteDiffResult best{tab[0][0], std::numeric_limits<double>::infinity()};
  for (int i = 1; i < ntab; ++i) {
    hh /= con;
    tab[0][i] = (f(x0 + hh) - f(x0 - hh)) / (2.0 * hh);
    double fac = con2;
    for (int j = 1; j <= i; ++j) {
      tab[j][i] = (tab[j - 1][i] * fac - tab[j - 1][i - 1]) / (fac - 1.0);
      fac *= con2;
      double errt = std::max(std::fabs(tab[j][i] - tab[j - 1][i]), std::fabs(tab[j][i] - tab[j - 1][i - 1]));
      if (errt <= best.abs_err) best = {tab[j][i], errt};
    }
    if (std::fabs(tab[i][i] - tab[i - 1][i - 1]) >= safe * best.abs_err) break;
  }
  return best;
}

}  // namespace mlw
