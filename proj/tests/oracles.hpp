#pragma once

// Quad-precision reference values for the unit tests. Straight series in
// __float128; nothing here calls the library.

#include <quadmath.h>

namespace oracle {

using quad = __float128;

inline const quad kEuler = 0.577215664901532860606512090082402431Q;

inline bool at_pole(quad z) { return z <= 0 && z == floorq(z); }

inline quad rgamma(quad z) { return at_pole(z) ? 0 : 1 / tgammaq(z); }

inline quad digamma(quad z) {
  quad shift = 0;
  if (z <= 0) {
    // reflection
    quad pi = M_PIq;
    return digamma(1 - z) - pi * cosq(pi * z) / sinq(pi * z);
  }
  while (z < 40) {
    shift -= 1 / z;
    z += 1;
  }
  quad z2 = 1 / (z * z);
  // B_{2n}/(2n)
  const quad c[] = {1.0Q / 12, -1.0Q / 120, 1.0Q / 252, -1.0Q / 240, 1.0Q / 132, -691.0Q / 32760, 1.0Q / 12};
  quad tail = 0, p = z2;
  for (quad ck : c) {
    tail += ck * p;
    p *= z2;
  }
  return shift + logq(z) - 1 / (2 * z) - tail;
}

// psi(z)/Gamma(z) with the pole limit (-1)^(m+1) m! at z = -m.
inline quad digamma_over_gamma(quad z) {
  if (at_pole(z)) {
    int m = static_cast<int>(-z);
    quad f = tgammaq(m + 1);
    return (m % 2 == 0) ? -f : f;
  }
  return digamma(z) / tgammaq(z);
}

// sum_{k>=k0} sign x^k k^p / (k!)^f * C(alpha k + beta), C = 1/Gamma or psi/Gamma.
inline quad family_series(double alpha, double beta, double x, int k0, bool factorial, int p, bool psi) {
  quad sum = 0, xs = x;
  for (int k = k0; k < 3000; ++k) {
    quad z = static_cast<quad>(alpha) * k + beta;
    quad c = psi ? -digamma_over_gamma(z) : rgamma(z);
    quad t = powq(xs, k) * c;
    if (factorial) t /= tgammaq(k + 1);
    if (p != 0) t *= powq(static_cast<quad>(k), p);
    sum += t;
    if (k > 20 && fabsq(t) < 1e-36Q * fabsq(sum)) break;
  }
  return sum;
}

inline quad mittag_leffler(double a, double b, double x) { return family_series(a, b, x, 0, false, 0, false); }
inline quad wright(double a, double b, double x) { return family_series(a, b, x, 0, true, 0, false); }
inline quad integral_ml(double a, double b, double x) { return family_series(a, b, x, 1, false, -1, false); }
inline quad integral_wright(double a, double b, double x) { return family_series(a, b, x, 1, true, -1, false); }

// Ein(x) = sum (-1)^(k+1) x^k/(k k!)
inline quad ein(quad x) {
  quad s = 0, p = 1;
  for (int k = 1; k < 400; ++k) {
    p *= -x / k;
    s -= p / k;
    if (fabsq(p) < 1e-40Q) break;
  }
  return s;
}

inline quad e1(quad x) { return ein(x) - kEuler - logq(x); }

inline quad bessel_i(quad nu, quad x) {
  quad s = 0, h = x / 2;
  for (int k = 0; k < 400; ++k) {
    quad t = powq(h, 2 * k + nu) / tgammaq(k + 1) * rgamma(k + nu + 1);
    s += t;
    if (k > 5 && fabsq(t) < 1e-38Q * fabsq(s)) break;
  }
  return s;
}

inline double d(quad v) { return static_cast<double>(v); }

}  // namespace oracle
