#include "ideal.hpp"

#include <cmath>

#include "errors.hpp"

namespace hyptet {

IdealTet::IdealTet(cplx a_, cplx b_, cplx c_, double tol) : a(a_), b(b_), c(c_) {
  if (std::abs(a * b * c - 1.0) > 1e-10)
    throw domain_error("IdealTet: clinant product abc != 1");
  for (cplx z : {a, b, c})
    if (std::abs(z - 1.0) < tol)
      throw degenerate_error("IdealTet: degenerate clinant (stretched/flattened limit)");
}

double IdealList::volume() const {
  double s = 0.0;
  for (cplx x : d) s += std::imag(dilog(x));
  return s;
}

IdealList IdealList::conjugate() const {
  IdealList out;
  out.d.reserve(d.size());
  for (cplx x : d) out.d.push_back(std::conj(x));
  return out;
}

cplx ideal_z(const IdealTet& t, int edge) {
  std::array<cplx, 3> cl = {t.a, t.b, t.c};
  int k = ((edge % 3) + 3) % 3;
  cplx first = cl[size_t(k)];
  cplx second = cl[size_t((k + 1) % 3)];
  return (1.0 - std::conj(first)) / (1.0 - second);
}

double ideal_volume(const IdealTet& t) { return bloch_wigner(ideal_z(t)); }

IdealList isosceles_split(const IdealTet& t) {
  IdealList out;
  out.d = {t.a, t.b, t.c};
  return out;
}

double Octahedron::holonomy_residual() const {
  return std::abs(w[0] * w[1] * w[2] * w[3] - 1.0);
}

double Octahedron::volume() const {
  double s = 0.0;
  for (cplx wi : w) s += bloch_wigner(wi);
  return s;
}

std::array<cplx, 8> oct_my_entries(const SuperCoords& s, cplx z) {
  const cplx a = s.clin[0], b = s.clin[1], c = s.clin[2], f = s.clin[5];
  const cplx r1 = s.root[0], r2 = s.root[1], r3 = s.root[2], r4 = s.root[3];
  return {1.0 / z,          z / r2, b / z,
          z * c / r4,       r3 * r4 / (z * c), z / r4,
          a * r2 / (z * r1), z * f / r2};
}

std::array<cplx, 4> waist_entries(const SuperCoords& s) {
  return {s.root[1], s.clin[0] / s.root[3], s.clin[2] / s.root[2],
          s.clin[4] / s.root[0]};
}

namespace {

// z-free parts of the odd entries (those of the form n_i / z) and of the
// even entries (z * p_i) of (s,z)_MY.
void holonomy_parts(const SuperCoords& s, std::array<cplx, 4>& n,
                    std::array<cplx, 4>& p) {
  const cplx a = s.clin[0], b = s.clin[1], c = s.clin[2], f = s.clin[5];
  const cplx r1 = s.root[0], r2 = s.root[1], r3 = s.root[2], r4 = s.root[3];
  n = {cplx(1.0), b, r3 * r4 / c, a * r2 / r1};
  p = {1.0 / r2, c / r4, 1.0 / r4, f / r2};
}

}  // namespace

cplx holonomy_k(const SuperCoords& s, cplx z) {
  std::array<cplx, 4> n, p;
  holonomy_parts(s, n, p);
  cplx even = 1.0, odd = 1.0;
  for (int i = 0; i < 4; ++i) {
    even *= 1.0 - std::conj(p[size_t(i)]) / z;  // conj of z*p_i on |z| = 1
    odd *= 1.0 - n[size_t(i)] / z;
  }
  return even - odd;
}

std::array<cplx, 3> holonomy_quadratic(const SuperCoords& s) {
  std::array<cplx, 4> n, p;
  holonomy_parts(s, n, p);
  for (auto& x : p) x = std::conj(x);
  // prod(z - p_i) - prod(z - n_i) = z (q2 z^2 + q1 z + q0): the constant
  // terms cancel because prod p_i = prod n_i on the constraint variety.
  auto e = [](const std::array<cplx, 4>& x, int k) {
    cplx s1 = 0, s2 = 0, s3 = 0;
    for (int i = 0; i < 4; ++i) {
      s1 += x[size_t(i)];
      for (int j = i + 1; j < 4; ++j) {
        s2 += x[size_t(i)] * x[size_t(j)];
        for (int l = j + 1; l < 4; ++l) s3 += x[size_t(i)] * x[size_t(j)] * x[size_t(l)];
      }
    }
    return k == 1 ? s1 : (k == 2 ? s2 : s3);
  };
  return {e(n, 1) - e(p, 1), e(p, 2) - e(n, 2), e(n, 3) - e(p, 3)};
}

Octahedron octahedron_from_s(const SuperCoords& s, cplx z, double tol) {
  if (std::abs(std::abs(z) - 1.0) > 1e-9)
    throw holonomy_error("octahedron_from_s: z must be unit sized");
  if (std::abs(holonomy_k(s, z)) > tol)
    throw holonomy_error("octahedron_from_s: z is not a holonomy root");
  auto my = oct_my_entries(s, z);
  Octahedron oct;
  for (int i = 0; i < 4; ++i)
    oct.w[size_t(i)] = (1.0 - std::conj(my[size_t(2 * i + 1)])) /
                       (1.0 - my[size_t(2 * i)]);
  return oct;
}

OctClinants oct_clinants(const SuperCoords& s) {
  const cplx a = s.clin[0], b = s.clin[1], c = s.clin[2], d = s.clin[3],
             e = s.clin[4], f = s.clin[5];
  const cplx r1 = s.root[0], r2 = s.root[1], r3 = s.root[2], r4 = s.root[3];
  OctClinants o;
  o.o = {b / r4, r1,     c / r4, a / r1, r3,     d / r3,
         b / r2, f / r2, c / r3, a / r4, e / r1, r2};
  return o;
}

double OctClinants::vertex_residual() const {
  // edges at each octahedron vertex, indices into the section-2.2 ordering
  static const int vert[6][4] = {{0, 1, 2, 3},  {4, 5, 6, 7},  {0, 4, 8, 9},
                                 {1, 5, 8, 10}, {2, 6, 9, 11}, {3, 7, 10, 11}};
  double m = 0.0;
  for (auto& vtx : vert) {
    cplx prod = 1.0;
    for (int idx : vtx) prod *= o[size_t(idx)];
    m = std::max(m, std::abs(prod - 1.0));
  }
  return m;
}

double OctClinants::waist_residual() const {
  static const int waist[3][4] = {{8, 9, 10, 11}, {1, 2, 5, 6}, {0, 3, 4, 7}};
  double m = 0.0;
  for (auto& wst : waist) {
    cplx prod = 1.0;
    for (int idx : wst) prod *= o[size_t(idx)];
    m = std::max(m, std::abs(prod - 1.0));
  }
  return m;
}

SuperCoords s_from_o(const OctClinants& oc, double tol) {
  if (oc.vertex_residual() > tol || oc.waist_residual() > tol)
    throw domain_error("s_from_o: clinants violate the octahedral constraints");
  const auto& o = oc.o;
  SuperCoords s;
  s.clin = {o[3] * o[1], o[6] * o[11], o[8] * o[4],
            o[5] * o[4], o[10] * o[1], o[7] * o[11]};
  s.root = {o[1], o[11], o[4], 1.0 / (o[0] * o[9] * o[2])};
  return s;
}

}  // namespace hyptet
