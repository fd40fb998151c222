#include "sampling.hpp"

#include <cmath>

#include "errors.hpp"
#include "monomial.hpp"
#include "murakami.hpp"

namespace hyptet {

namespace {

Vec3 random_ball_point(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ur(rmin, rmax);
  for (;;) {
    Vec3 p{u(rng), u(rng), u(rng)};
    double n = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    if (n < 1e-6 || n > 1.0) continue;
    double r = ur(rng);
    return Vec3{p.x * r / n, p.y * r / n, p.z * r / n};
  }
}

double tet_euclid_vol(const std::array<Vec3, 4>& v) {
  double a[3] = {v[1].x - v[0].x, v[1].y - v[0].y, v[1].z - v[0].z};
  double b[3] = {v[2].x - v[0].x, v[2].y - v[0].y, v[2].z - v[0].z};
  double c[3] = {v[3].x - v[0].x, v[3].y - v[0].y, v[3].z - v[0].z};
  double det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
               a[2] * (b[0] * c[1] - b[1] * c[0]);
  return std::abs(det) / 6.0;
}

}  // namespace

KleinTet random_klein_tet(std::mt19937_64& rng) {
  for (;;) {
    KleinTet k;
    for (auto& p : k.v) p = random_ball_point(rng, 0.15, 0.8);
    if (tet_euclid_vol(k.v) > 0.01) return k;
  }
}

DihedralAngles random_finite_angles(std::mt19937_64& rng, double margin) {
  for (int tries = 0; tries < 20000; ++tries) {
    KleinTet k = random_klein_tet(rng);
    DihedralAngles a = angles_from_klein(k);
    Balanced b = b_from_c(circulants_from_angles(a));
    if (!genericity(b, margin).generic) continue;
    if (my_data_raw(circulants_from_angles(a)).delta <= 1e-6) continue;
    return a;
  }
  throw error(status::internal, "random_finite_angles: rejection sampler starved");
}

IdealTet random_ideal_tet(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.15, 0.85);
  for (;;) {
    // angles of a Euclidean triangle = dihedral angles of an ideal tetrahedron
    double x = u(rng), y = u(rng);
    if (x + y >= 0.95) continue;
    double A = x * M_PI, B = y * M_PI, C = M_PI - A - B;
    if (C < 0.1) continue;
    cplx a = std::polar(1.0, 2.0 * A);
    cplx b = std::polar(1.0, 2.0 * B);
    cplx c = std::polar(1.0, 2.0 * C);
    return IdealTet(a, b, c);
  }
}

Balanced random_balanced(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<int> coin(0, 1);
  Balanced b;
  for (int i = 0; i < 6; ++i) b[i] = std::polar(1.0, u(rng));
  cplx r2 = (b[0] * b[1] * b[2]) / (b[3] * b[4] * b[5]);
  b[6] = principal_sqrt(r2);
  if (coin(rng)) b[6] = -b[6];
  return b;
}

Circulants random_circulants(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  Circulants c;
  for (int i = 0; i < 6; ++i) c[i] = std::polar(1.0, u(rng));
  return c;
}

Circulants random_generic_hyperbolic(std::mt19937_64& rng, double margin) {
  for (int tries = 0; tries < 100000; ++tries) {
    Circulants c = random_circulants(rng);
    if (my_data_raw(c).delta < 0.5) continue;
    if (!genericity(b_from_c(c), margin).generic) continue;
    return c;
  }
  throw error(status::internal, "random_generic_hyperbolic: rejection sampler starved");
}

Circulants random_nonhyperbolic(std::mt19937_64& rng) {
  for (int tries = 0; tries < 100000; ++tries) {
    Circulants c = random_circulants(rng);
    if (my_data_raw(c).delta < -0.5) return c;
  }
  throw error(status::internal, "random_nonhyperbolic: rejection sampler starved");
}

}  // namespace hyptet
