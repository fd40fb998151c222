#include "polylog.hpp"

#include <cmath>

#include "errors.hpp"

namespace hyptet {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2Over6 = 1.6449340668482264365;

// Li2 by its defining power series, sum z^k / k^2.  Good for |z| <= 1/2.
cplx dilog_series(cplx z) {
  cplx term = z;
  cplx sum = z;
  for (int k = 2; k < 60; ++k) {
    term *= z;
    cplx add = term / double(k * k);
    sum += add;
    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

// Li2 as a series in u = -log(1-z):
//   Li2(z) = sum_{k>=0} B_k u^{k+1} / (k+1)!
// with B_k the Bernoulli numbers (B_1 = -1/2).  Converges for |u| < 2pi;
// we only call it with |u| <~ 1 where ~20 terms give full precision.
cplx dilog_log_series(cplx z) {
  static const double coeff[] = {
      // B_k / (k+1)! for k = 0..30, odd k > 1 vanish.
      1.0,                         // k=0
      -1.0 / 4.0,                  // k=1
      1.0 / 36.0,                  // k=2
      0.0,
      -1.0 / 3600.0,               // k=4
      0.0,
      1.0 / 211680.0,              // k=6
      0.0,
      -1.0 / 10886400.0,           // k=8
      0.0,
      1.0 / 526901760.0,           // k=10
      0.0,
      -4.0647616451442255e-11,     // k=12
      0.0,
      8.9216910204564526e-13,      // k=14
      0.0,
      -1.9939295860721076e-14,     // k=16
      0.0,
      4.5189800296199182e-16,      // k=18
      0.0,
      -1.0356517612181247e-17,     // k=20
      0.0,
      2.3952186210261867e-19,      // k=22
      0.0,
      -5.5817858743250093e-21,     // k=24
      0.0,
      1.3091507554183213e-22,      // k=26
      0.0,
      -3.0874198024267403e-24,     // k=28
      0.0,
  };
  cplx u = -std::log(1.0 - z);
  cplx up = u;
  cplx sum = 0.0;
  for (double c : coeff) {
    if (c != 0.0) {
      cplx add = c * up;
      sum += add;
      if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    up *= u;
  }
  return sum;
}

}  // namespace

cplx dilog(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw domain_error("dilog: non-finite argument");
  // on-cut evaluation takes the limit from the lower half-plane
  if (z.imag() == 0.0 && z.real() > 1.0) z = cplx(z.real(), -0.0);

  // |z| > 1: inversion  Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2 / 2.
  if (std::abs(z) > 1.0) {
    cplx lz = std::log(-z);
    return -dilog(1.0 / z) - kPi2Over6 - 0.5 * lz * lz;
  }
  // Re z > 1/2: reflection  Li2(z) = pi^2/6 - log(z)log(1-z) - Li2(1-z).
  if (z.real() > 0.5) {
    cplx w = 1.0 - z;
    if (std::abs(w) < 1e-100) return kPi2Over6;
    return kPi2Over6 - std::log(z) * std::log(w) - dilog(w);
  }
  if (std::abs(z) <= 0.5) return dilog_series(z);
  return dilog_log_series(z);
}

double bloch_wigner(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw domain_error("bloch_wigner: non-finite argument");
  if (std::abs(z) < 1e-14 || std::abs(z - 1.0) < 1e-14)
    throw degenerate_error("bloch_wigner: degenerate tetrahedron parameter (z near 0 or 1)");
  if (z.imag() == 0.0) return 0.0;
  return std::imag(dilog(z)) + std::arg(1.0 - z) * std::log(std::abs(z));
}

double lobachevsky(double x) {
  // Reduce mod pi first; e^{2ix} is then well away from rounding trouble.
  double t = std::fmod(x, kPi);
  if (t < 0) t += kPi;
  if (t == 0.0) return 0.0;
  cplx z = std::polar(1.0, 2.0 * t);
  return 0.5 * std::imag(dilog(z));
}

cplx ell(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw domain_error("ell: non-finite argument");
  if (z.imag() == 0.0 && z.real() <= 0.0)
    throw branch_cut_error("ell: argument on the cut (-inf, 0]");
  cplx lz = std::log(z);
  return dilog(1.0 - z) + 0.25 * lz * lz;
}

cplx kay(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw domain_error("kay: non-finite argument");
  if (std::abs(z) == 0.0) throw branch_cut_error("kay: argument 0");
  return 0.5 * (dilog(1.0 - z) - dilog(1.0 - 1.0 / z));
}

cplx aitch(cplx w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw domain_error("aitch: non-finite argument");
  if (w.imag() == 0.0 && std::abs(w.real()) >= 1.0)
    throw branch_cut_error("aitch: argument on the cuts (-inf,-1] u [1,inf)");
  if (std::abs(w) == 0.0) return 0.0;
  return ell((1.0 - w) / (1.0 + w));
}

}  // namespace hyptet
