#pragma once

// Murakami-Yano quadratic data, the 8-entry MY list, the volume formula,
// octahedral buddies, and the Gram-matrix cross-check.

#include <array>
#include <optional>
#include <utility>

#include "coords.hpp"
#include "ideal.hpp"

namespace hyptet {

struct MYData {
  cplx alpha;
  double beta;
  double delta;              // |alpha|^2 - beta^2
  std::optional<cplx> rho;   // (-beta - i sqrt(delta)) / alpha, only if delta > 0

  // Both roots of alpha z^2 + 2 beta z + conj(alpha), any sign of delta.
  std::pair<cplx, cplx> roots() const;
};

inline constexpr double kEuclideanTol = 1e-9;

// Quadratic data from circulants (section 1.1.3 expressions).  Never throws;
// rho is empty when delta <= 0.
MYData my_data_raw(const Circulants& c);

// Same, but delta <= 0 raises euclidean_error / non_hyperbolic_error.
MYData my_data(const Circulants& c);

// The identical quantities computed from balanced coordinates.
MYData balanced_data_raw(const Balanced& b);
MYData balanced_data(const Balanced& b);

// The "hatted" data of the octahedron holonomy quadratic at s(c): its rho is
// the octahedral root, and rho(c) = oct_data(g_o . c).rho.
MYData oct_data_raw(const Circulants& c);
MYData oct_data(const Circulants& c);

// h(c,z) = alpha z^2 + 2 beta z + conj(alpha), and the factored product form
// (the two agree identically).
cplx h_poly(const Circulants& c, cplx z);
cplx h_poly_factored(const Circulants& c, cplx z);

// The 8-entry isosceles list (c)_MY.  Requires delta > 0.
IdealList my_list(const Circulants& c);

// Murakami-Yano volume: V = 1/4 (vol (c)_MY + vol (conj c)_MY).
// Requires delta > 0 and a generic tetrahedron.
double volume_my(const Circulants& c);
double volume_my(const DihedralAngles& a);

// The pair of octahedra ((c)_oct, (conj c)_oct) with conjugate edge clinants.
struct Buddies {
  Octahedron first, second;
  cplx root_first, root_second;  // the octahedral roots used
  double volume() const { return first.volume() + second.volume(); }
};
Buddies buddies(const Circulants& c);

// Gram matrix: unit diagonal, entry (i,j) = -cos(angle between faces i,j).
using Gram = std::array<std::array<double, 4>, 4>;
Gram gram(const DihedralAngles& a);
double gram_det(const Gram& g);

// Vertex {jkl} (opposite face i) is finite iff the principal 3x3 minor
// obtained by deleting row/column i is positive definite.
std::array<bool, 4> finite_vertices(const Gram& g);
bool is_finite(const DihedralAngles& a);
bool is_finite(const Circulants& c);

}  // namespace hyptet
