#include "polylog.hpp"

#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "reference.hpp"

using namespace hyptet;
using hyptet_test::dilog_quadrature;
using hyptet_test::random_in_annulus;
using hyptet_test::random_unit;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("dilog at distinguished points") {
  CHECK(std::abs(dilog(cplx(0.0, 0.0))) == 0.0);

  // Frozen from the defining-integral quadrature (= pi^2/6 and -pi^2/12).
  cplx at1 = dilog_quadrature(cplx(1.0 - 1e-13, 0.0));
  CHECK(std::abs(at1 - cplx(1.6449340668482264, 0)) < 1e-11);
  CHECK(std::abs(dilog(cplx(1.0, 0.0)) - cplx(1.6449340668482264, 0)) < 1e-14);

  cplx atm1 = dilog_quadrature(cplx(-1.0, 0.0));
  CHECK(std::abs(atm1 - cplx(-0.8224670334241132, 0)) < 1e-13);
  CHECK(std::abs(dilog(cplx(-1.0, 0.0)) - cplx(-0.8224670334241132, 0)) < 1e-14);

  CHECK_THROWS_AS(dilog(cplx(std::nan(""), 0.0)), domain_error);
}

TEST_CASE("dilog matches quadrature on the |z| <= 4 disc") {
  std::mt19937_64 rng(20240811);
  int n = 0;
  while (n < 200) {
    cplx z = random_in_annulus(rng, 0.05, 4.0);
    // quadrature path must stay away from the cut [1, inf)
    if (std::abs(z.imag()) < 1e-3 && z.real() > 0.9) continue;
    ++n;
    cplx ref = dilog_quadrature(z);
    CHECK(std::abs(dilog(z) - ref) <= 1e-13 * (1.0 + std::abs(ref)));
  }
}

TEST_CASE("dilog on-cut values take the lower half-plane limit") {
  for (double x : {1.5, 2.0, 3.7}) {
    cplx below = dilog(cplx(x, -1e-12));
    cplx on = dilog(cplx(x, 0.0));
    CHECK(std::abs(on - below) < 1e-9);
    CHECK(on.imag() < 0.0);  // Im = -pi log x on the lower side
    CHECK(std::abs(on.imag() + kPi * std::log(x)) < 1e-12);
  }
}

TEST_CASE("inversion identity Li2(1-1/z) + Li2(1-z) + log(z)^2/2 = 0") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    cplx z = random_in_annulus(rng, 0.1, 10.0);
    if (z.imag() == 0.0 && z.real() <= 0.0) continue;
    cplx lz = std::log(z);
    cplx res = dilog(1.0 - 1.0 / z) + dilog(1.0 - z) + 0.5 * lz * lz;
    CHECK(std::abs(res) < 1e-12);
  }
}

TEST_CASE("bloch_wigner basics") {
  CHECK(bloch_wigner(cplx(0.5, 0.0)) == 0.0);

  // Volume of the regular ideal tetrahedron, frozen from quadrature.
  cplx w = std::polar(1.0, kPi / 3.0);
  double ref = std::imag(dilog_quadrature(w)) +
               std::arg(1.0 - w) * std::log(std::abs(w));
  CHECK(std::abs(ref - 1.0149416064096537) < 1e-12);
  CHECK(std::abs(bloch_wigner(w) - 1.0149416064096537) < 1e-13);

  CHECK_THROWS_AS(bloch_wigner(cplx(0.0, 0.0)), degenerate_error);
  CHECK_THROWS_AS(bloch_wigner(cplx(1.0, 0.0)), degenerate_error);
}

TEST_CASE("bloch_wigner antisymmetry and continuity across the cut") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    cplx z = random_in_annulus(rng, 0.05, 6.0);
    if (std::abs(z) < 1e-3 || std::abs(z - 1.0) < 1e-3) continue;
    CHECK(std::abs(bloch_wigner(std::conj(z)) + bloch_wigner(z)) < 1e-13);
  }
  for (double x : {1.3, 2.5, 5.0}) {
    double above = bloch_wigner(cplx(x, 1e-9));
    double below = bloch_wigner(cplx(x, -1e-9));
    CHECK(std::abs(above - below) < 1e-7);
  }
}

TEST_CASE("lobachevsky values, oddness, periodicity") {
  CHECK(lobachevsky(0.0) == 0.0);
  CHECK(std::abs(lobachevsky(kPi / 2.0)) < 1e-15);

  // Frozen from quadrature of Im Li2(e^{i pi/3}) / 2.
  double ref = 0.5 * std::imag(dilog_quadrature(std::polar(1.0, kPi / 3.0)));
  CHECK(std::abs(ref - 0.5074708032) < 1e-9);
  CHECK(std::abs(lobachevsky(kPi / 6.0) - 0.5074708032) < 1e-9);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    double x = u(rng);
    CHECK(std::abs(lobachevsky(x + kPi) - lobachevsky(x)) < 1e-14);
    CHECK(std::abs(lobachevsky(-x) + lobachevsky(x)) < 1e-14);
  }
}

TEST_CASE("Im Li2(e^{2 i theta}) = 2 Lambda(theta)") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int i = 0; i < 100; ++i) {
    double th = u(rng);
    double lhs = std::imag(dilog(std::polar(1.0, 2.0 * th)));
    CHECK(std::abs(lhs - 2.0 * lobachevsky(th)) < 1e-13);
  }
}

TEST_CASE("ell normalization, cut, and inversion antisymmetry") {
  CHECK(std::abs(ell(cplx(1.0, 0.0))) == 0.0);
  CHECK_THROWS_AS(ell(cplx(-0.5, 0.0)), branch_cut_error);
  CHECK_THROWS_AS(ell(cplx(0.0, 0.0)), branch_cut_error);

  // real z in (0,2) gives real output
  for (double x : {0.1, 0.5, 1.5, 1.9}) CHECK(ell(cplx(x, 0.0)).imag() == 0.0);

  cplx z0(2.0, 1.0);
  CHECK(std::abs(ell(1.0 / z0) + ell(z0)) < 1e-14);

  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    cplx z = random_in_annulus(rng, 0.1, 10.0);
    if (std::abs(z.imag()) < 1e-6 && z.real() <= 0.0) continue;
    CHECK(std::abs(ell(1.0 / z) + ell(z)) < 1e-12);
  }
}

TEST_CASE("kay antisymmetry and kay = ell") {
  CHECK(std::abs(kay(cplx(1.0, 0.0))) == 0.0);
  cplx z0(2.0, 1.0);
  CHECK(std::abs(kay(z0) + kay(1.0 / z0)) < 1e-13);
  CHECK(std::abs(kay(cplx(1.3, 0.7)) - ell(cplx(1.3, 0.7))) < 1e-14);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    cplx z = random_in_annulus(rng, 0.2, 5.0);
    if (std::abs(z.imag()) < 1e-6 && z.real() <= 0.0) continue;
    CHECK(std::abs(kay(z) - ell(z)) < 1e-12);
  }
}

TEST_CASE("aitch oddness and direct substitution") {
  CHECK(std::abs(aitch(cplx(0.0, 0.0))) == 0.0);
  CHECK(std::abs(aitch(cplx(0.0, -0.3)) + aitch(cplx(0.0, 0.3))) < 1e-14);
  CHECK(std::abs(aitch(cplx(0.2, 0.0)) - ell(cplx(2.0 / 3.0, 0.0))) < 1e-15);
  CHECK_THROWS_AS(aitch(cplx(1.5, 0.0)), branch_cut_error);
  CHECK_THROWS_AS(aitch(cplx(-1.0, 0.0)), branch_cut_error);

  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    cplx w = random_in_annulus(rng, 0.01, 3.0);
    if (std::abs(w.imag()) < 1e-6 && std::abs(w.real()) >= 1.0) continue;
    CHECK(std::abs(aitch(-w) + aitch(w)) < 1e-12);
  }
}
