#pragma once

// Ideal tetrahedra, their complex coordinate and volume, the isosceles
// splitting, and the ideal octahedron with its holonomy constraint.

#include <array>
#include <vector>

#include "coords.hpp"

namespace hyptet {

// Default threshold below which a clinant counts as degenerate (= 1).
inline constexpr double kDegenerateTol = 1e-8;

// Labeled oriented ideal tetrahedron: clinant list (a,b,c,a,b,c), abc = 1.
struct IdealTet {
  cplx a, b, c;

  IdealTet(cplx a, cplx b, cplx c, double tol = kDegenerateTol);
  IdealTet conjugate() const { return IdealTet(std::conj(a), std::conj(b), std::conj(c)); }
};

// Signed list of isosceles ideal tetrahedra; entry d stands for
// (d^2, -1/d, -1/d)_it and orientation is carried by conjugation.
// List volume is sum Im Li2(d_j).
struct IdealList {
  std::vector<cplx> d;
  double volume() const;
  IdealList conjugate() const;
};

// Complex coordinate z of an ideal tetrahedron; edge = 0,1,2 cycles the
// distinguished edge through the even permutations, z -> (z-1)/z -> 1/(1-z).
cplx ideal_z(const IdealTet& t, int edge = 0);

// Orientation-sensitive volume B(z).
double ideal_volume(const IdealTet& t);

// Milnor's splitting into three isosceles tetrahedra: 2[(a,b,c)] = [(a),(b),(c)].
IdealList isosceles_split(const IdealTet& t);

// Ideal octahedron in w-form: four tetrahedron coordinates, w1 w2 w3 w4 = 1.
struct Octahedron {
  std::array<cplx, 4> w;
  double holonomy_residual() const;  // |w1 w2 w3 w4 - 1|
  double volume() const;             // sum of B(w_i)
};

// The 12 edge clinants of an octahedron in the section-2.2 ordering.
struct OctClinants {
  std::array<cplx, 12> o;
  double vertex_residual() const;  // max over the 6 vertex products
  double waist_residual() const;   // max over the 3 waist products
};

// 8-entry isosceles list (s,z)_MY attached to the octahedron (s, z).
std::array<cplx, 8> oct_my_entries(const SuperCoords& s, cplx z);

// Waist list (r2, a/r4, c/r3, e/r1).
std::array<cplx, 4> waist_entries(const SuperCoords& s);

// Holonomy polynomial k(s,z) (z restricted to the unit circle).
cplx holonomy_k(const SuperCoords& s, cplx z);

// The quadratic z^4 k(s,z) / z = q2 z^2 + q1 z + q0; returns {q2, q1, q0}.
std::array<cplx, 3> holonomy_quadratic(const SuperCoords& s);

// Builds the w-form octahedron; z must be a unit root of k(s, .), otherwise
// holonomy_error.
Octahedron octahedron_from_s(const SuperCoords& s, cplx z, double tol = 1e-7);

// Edge clinants o(s) and the inverse map s(o).
OctClinants oct_clinants(const SuperCoords& s);
SuperCoords s_from_o(const OctClinants& o, double tol = 1e-7);

}  // namespace hyptet
