#pragma once

// Independent numeric volume oracle: realize a finite tetrahedron from its
// dihedral angles inside the Klein ball and integrate the hyperbolic volume
// element (1-|x|^2)^-2 directly.

#include <array>
#include <cstdint>

#include "coords.hpp"
#include "murakami.hpp"

namespace hyptet {

struct Vec3 {
  double x, y, z;
};

struct KleinTet {
  std::array<Vec3, 4> v;  // vertex i sits opposite face i
};

// Gram-matrix realization.  Throws realization_error when the Gram matrix is
// not Lorentzian or a vertex fails to be finite; the result reproduces the
// input angles to ~1e-10.
KleinTet realize(const DihedralAngles& a);

// Dihedral angles recovered from the face normals of a Klein tetrahedron.
DihedralAngles angles_from_klein(const KleinTet& k);

// Hyperbolic edge lengths, ordered like the angle letters (a..f).
std::array<double, 6> edge_lengths(const KleinTet& k);

// Adaptive integration of (1-|x|^2)^-2; absolute error <= tol.
double numeric_volume(const KleinTet& k, double tol = 1e-7);

// Midpoint Monte Carlo secondary path.
double numeric_volume_mc(const KleinTet& k, std::uint64_t samples, std::uint64_t seed);

}  // namespace hyptet
