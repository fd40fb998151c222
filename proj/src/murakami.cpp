#include "murakami.hpp"

#include <cmath>

#include "errors.hpp"
#include "monomial.hpp"

namespace hyptet {

std::pair<cplx, cplx> MYData::roots() const {
  cplx disc = std::sqrt(cplx(beta * beta - std::norm(alpha), 0.0));
  return {(-beta - disc) / alpha, (-beta + disc) / alpha};
}

namespace {

MYData finish(cplx alpha, cplx beta_c, const char* where) {
  if (std::abs(beta_c.imag()) > 1e-9 * (1.0 + std::abs(beta_c)))
    throw domain_error(std::string(where) + ": beta came out non-real");
  MYData d;
  d.alpha = alpha;
  d.beta = beta_c.real();
  d.delta = std::norm(alpha) - d.beta * d.beta;
  if (d.delta > 0.0)
    d.rho = (-d.beta - cplx(0.0, 1.0) * std::sqrt(d.delta)) / alpha;
  return d;
}

MYData require_hyperbolic(MYData d, const char* where) {
  if (std::abs(d.delta) <= kEuclideanTol)
    throw euclidean_error(std::string(where) + ": delta = 0 (Euclidean tetrahedron)",
                          d.delta);
  if (d.delta < 0.0)
    throw non_hyperbolic_error(std::string(where) + ": delta < 0", d.delta);
  return d;
}

}  // namespace

MYData my_data_raw(const Circulants& c) {
  const cplx A = c[0], B = c[1], C = c[2], D = c[3], E = c[4], F = c[5];
  const cplx p = A * B * C, q = D * E * F;
  cplx alpha = 2.0 * (A * D + B * E + C * F + p * q +
                      p * (D / A + E / B + F / C) + q);
  cplx beta = (D / A + E / B + F / C + A / D + B / E + C / F) -
              (A * D + B * E + C * F + 1.0 / (A * D) + 1.0 / (B * E) +
               1.0 / (C * F));
  return finish(alpha, beta, "my_data");
}

MYData my_data(const Circulants& c) { return require_hyperbolic(my_data_raw(c), "my_data"); }

MYData balanced_data_raw(const Balanced& b) {
  const cplx t = b[0], u = b[1], v = b[2], T = b[3], U = b[4], V = b[5],
             r = b[6];
  cplx alpha = 2.0 * (t + u + v + t * u * v - r * (T + U + V + T * U * V));
  cplx beta = (T + U + V + 1.0 / T + 1.0 / U + 1.0 / V) -
              (t + u + v + 1.0 / t + 1.0 / u + 1.0 / v);
  return finish(alpha, beta, "balanced_data");
}

MYData balanced_data(const Balanced& b) {
  return require_hyperbolic(balanced_data_raw(b), "balanced_data");
}

MYData oct_data_raw(const Circulants& c) {
  auto q = holonomy_quadratic(s_from_c(c));
  // q = (AB^2D/2) (alpha z^2 + 2 beta z + conj(alpha))
  const cplx scale = c[0] * c[1] * c[1] * c[3] * 0.5;
  cplx alpha = q[0] / scale;
  cplx beta = 0.5 * q[1] / scale;
  if (std::abs(q[2] / scale - std::conj(alpha)) > 1e-9 * (1.0 + std::abs(alpha)))
    throw error(status::internal, "oct_data: quadratic lost its conjugate pairing");
  return finish(alpha, beta, "oct_data");
}

MYData oct_data(const Circulants& c) { return require_hyperbolic(oct_data_raw(c), "oct_data"); }

cplx h_poly(const Circulants& c, cplx z) {
  MYData d = my_data_raw(c);
  return d.alpha * z * z + 2.0 * d.beta * z + std::conj(d.alpha);
}

cplx h_poly_factored(const Circulants& c, cplx z) {
  const cplx A = c[0], B = c[1], C = c[2], D = c[3], E = c[4], F = c[5];
  cplx even = (1.0 - z) * (1.0 - A * B * D * E * z) * (1.0 - A * C * D * F * z) *
              (1.0 - B * C * E * F * z);
  cplx odd = (1.0 + A * B * C * z) * (1.0 + A * E * F * z) *
             (1.0 + B * D * F * z) * (1.0 + C * D * E * z);
  return (2.0 / (A * B * C * D * E * F)) * (-1.0 / z) * (even - odd);
}

IdealList my_list(const Circulants& c) {
  MYData d = my_data(c);
  const cplx rho = *d.rho;
  const cplx A = c[0], B = c[1], C = c[2], D = c[3], E = c[4], F = c[5];
  IdealList out;
  out.d = {std::conj(rho),
           -rho * C * D * E,
           std::conj(rho * B * C * E * F),
           -rho * A * E * F,
           std::conj(rho * A * C * D * F),
           -rho * A * B * C,
           std::conj(rho * A * B * D * E),
           -rho * B * D * F};
  return out;
}

double volume_my(const Circulants& c) {
  require_generic(b_from_c(c), "volume_my");
  return 0.25 * (my_list(c).volume() + my_list(conj(c)).volume());
}

double volume_my(const DihedralAngles& a) {
  return volume_my(circulants_from_angles(a));
}

Buddies buddies(const Circulants& c) {
  require_generic(b_from_c(c), "buddies");
  Circulants cc = conj(c);
  MYData d1 = oct_data(c);
  MYData d2 = oct_data(cc);
  Buddies out;
  out.root_first = *d1.rho;
  out.root_second = *d2.rho;
  out.first = octahedron_from_s(s_from_c(c), out.root_first);
  out.second = octahedron_from_s(s_from_c(cc), out.root_second);
  return out;
}

Gram gram(const DihedralAngles& a) {
  // A,B,C sit at the edges through the vertex where faces 0,1,2 meet and
  // D,E,F at the respective opposite edges:
  // A={01} B={02} C={12} D={23} E={13} F={03}.
  Gram g{};
  for (int i = 0; i < 4; ++i) g[size_t(i)][size_t(i)] = 1.0;
  auto set = [&g](int i, int j, double th) {
    g[size_t(i)][size_t(j)] = g[size_t(j)][size_t(i)] = -std::cos(th);
  };
  set(0, 1, a[0]);
  set(0, 2, a[1]);
  set(1, 2, a[2]);
  set(2, 3, a[3]);
  set(1, 3, a[4]);
  set(0, 3, a[5]);
  return g;
}

double gram_det(const Gram& g) {
  double m[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = g[size_t(i)][size_t(j)];
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int rr = col + 1; rr < 4; ++rr)
      if (std::abs(m[rr][col]) > std::abs(m[piv][col])) piv = rr;
    if (m[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < 4; ++j) std::swap(m[piv][j], m[col][j]);
      det = -det;
    }
    det *= m[col][col];
    for (int rr = col + 1; rr < 4; ++rr) {
      double fct = m[rr][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[rr][j] -= fct * m[col][j];
    }
  }
  return det;
}

std::array<bool, 4> finite_vertices(const Gram& g) {
  std::array<bool, 4> fin{};
  for (int skip = 0; skip < 4; ++skip) {
    int idx[3], n = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) idx[n++] = i;
    // Sylvester on the principal 3x3 minor
    double m11 = g[size_t(idx[0])][size_t(idx[0])];
    double d2 = m11 * g[size_t(idx[1])][size_t(idx[1])] -
                g[size_t(idx[0])][size_t(idx[1])] * g[size_t(idx[1])][size_t(idx[0])];
    double d3 = 0.0;
    {
      double a00 = g[size_t(idx[0])][size_t(idx[0])], a01 = g[size_t(idx[0])][size_t(idx[1])],
             a02 = g[size_t(idx[0])][size_t(idx[2])], a11 = g[size_t(idx[1])][size_t(idx[1])],
             a12 = g[size_t(idx[1])][size_t(idx[2])], a22 = g[size_t(idx[2])][size_t(idx[2])];
      d3 = a00 * (a11 * a22 - a12 * a12) - a01 * (a01 * a22 - a12 * a02) +
           a02 * (a01 * a12 - a11 * a02);
    }
    fin[size_t(skip)] = (m11 > 0.0 && d2 > 0.0 && d3 > 0.0);
  }
  return fin;
}

bool is_finite(const DihedralAngles& a) {
  Gram g = gram(a);
  if (gram_det(g) >= 0.0) return false;
  auto fv = finite_vertices(g);
  return fv[0] && fv[1] && fv[2] && fv[3];
}

bool is_finite(const Circulants& c) { return is_finite(angles_from_circulants(c)); }

}  // namespace hyptet
