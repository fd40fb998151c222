#pragma once

// Seeded generators for test and verification inputs.  Everything funnels
// through a caller-owned mt19937_64 so suites are reproducible.

#include <random>

#include "coords.hpp"
#include "ideal.hpp"
#include "klein.hpp"

namespace hyptet {

// Four points in the Klein ball in general position; always a finite
// hyperbolic tetrahedron.
KleinTet random_klein_tet(std::mt19937_64& rng);

// Angle data of a random finite tetrahedron whose 46 genericity monomials
// all stay at least `margin` away from 1.
DihedralAngles random_finite_angles(std::mt19937_64& rng, double margin = 0.03);

// Nondegenerate ideal tetrahedron, positively oriented.
IdealTet random_ideal_tet(std::mt19937_64& rng);

// Random point of the balanced 7-torus (both square roots equally likely).
Balanced random_balanced(std::mt19937_64& rng);

// Uniform circulants; and rejection-filtered variants.
Circulants random_circulants(std::mt19937_64& rng);
Circulants random_generic_hyperbolic(std::mt19937_64& rng, double margin = 0.02);
Circulants random_nonhyperbolic(std::mt19937_64& rng);  // delta < 0

}  // namespace hyptet
