#pragma once

// Slow reference evaluations used only by tests: the dilogarithm by adaptive
// quadrature of its defining integral, plus a seeded RNG helper.  These stay
// independent of src/polylog.cpp so the identity suite checks something real.

#include <cmath>
#include <complex>
#include <functional>
#include <random>

namespace hyptet_test {

using cplx = std::complex<double>;

// Adaptive Simpson on [a,b] for a complex-valued integrand.
inline cplx adaptive_simpson(const std::function<cplx(double)>& f, double a, double b,
                             double tol, int depth = 0) {
  double m = 0.5 * (a + b);
  cplx fa = f(a), fm = f(m), fb = f(b);

  std::function<cplx(double, double, cplx, cplx, cplx, double, int)> rec =
      [&](double lo, double hi, cplx flo, cplx fmid, cplx fhi, double eps, int d) -> cplx {
    double mid = 0.5 * (lo + hi);
    double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    cplx flm = f(lm), frm = f(rm);
    cplx whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    cplx left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    cplx right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    cplx delta = left + right - whole;
    if (d > 48 || std::abs(delta) < 15.0 * eps)
      return left + right + delta / 15.0;
    return rec(lo, mid, flo, flm, fmid, 0.5 * eps, d + 1) +
           rec(mid, hi, fmid, frm, fhi, 0.5 * eps, d + 1);
  };
  return rec(a, b, fa, fm, fb, tol, depth);
}

// Li2(z) = -int_0^1 log(1 - t z) / t dt along the straight ray to z.
// Valid for z off [1, inf).
inline cplx dilog_quadrature(cplx z, double tol = 1e-14) {
  if (std::abs(z) == 0.0) return 0.0;
  auto integrand = [z](double t) -> cplx {
    if (t < 1e-30) return z;  // -log(1 - tz)/t -> z as t -> 0
    return -std::log(1.0 - t * z) / t;
  };
  return adaptive_simpson(integrand, 0.0, 1.0, tol);
}

// Uniform point on the unit circle avoiding a neighborhood of 1.
inline cplx random_unit(std::mt19937_64& rng, double margin_from_one = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  for (;;) {
    cplx z = std::polar(1.0, u(rng));
    if (std::abs(z - 1.0) > margin_from_one) return z;
  }
}

inline cplx random_in_annulus(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> ur(rmin, rmax);
  std::uniform_real_distribution<double> ua(0.0, 2.0 * M_PI);
  return std::polar(ur(rng), ua(rng));
}

}  // namespace hyptet_test
