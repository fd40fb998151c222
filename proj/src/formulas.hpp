#pragma once

// The gamma / c_i machinery, the z-list, the H-based volume forms, the magic
// clinant, and the ten coset volume formulas.

#include <array>

#include "coords.hpp"
#include "monomial.hpp"
#include "murakami.hpp"

namespace hyptet {

inline constexpr double kFtTol = 1e-10;

// gamma in circulant form: [1,-CDE, BCEF,-AEF, ACDF,-ABC, ABDE,-BDF].
std::array<cplx, 8> gamma_vec(const Circulants& c);

// The same eight monomials read off balanced coordinates,
// [r, 1, rTU, tu, rTV, tv, rUV, uv]; note the odd/even positions swap
// relative to the circulant form.
std::array<cplx, 8> gamma_vec_balanced(const Balanced& b);

// c_i = -i gamma_i / (alpha + gamma_i beta), circulant ordering.
std::array<cplx, 8> c_weights(const Circulants& c);

struct ZList {
  std::array<cplx, 8> z;  // circulant-ordered: z_i pairs with gamma_vec(c)[i]

  double product_residual() const;        // |prod z_odd/z_even - 1|
  double one_minus_product_residual() const;
  cplx common_clinant() const;            // z_1 / conj(z_1)
  double clinant_residual() const;        // max_i |z_i/conj(z_i) - clinant|
  bool in_ft(double tol = kFtTol) const;  // all z_1/z_j real positive
};

// z_j = (1 - gamma_j eta) / (1 - gamma_j eta^c) where (eta, eta^c) is the
// root pair of the balanced quadratic, ordered so the common clinant equals
// the magic clinant.  Requires delta > 0 and a generic input.
ZList z_list(const Balanced& b);

// Magic clinant m = ((beta^2 - delta) - 2 i beta sqrt(delta)) / |alpha|^2.
cplx magic_clinant(const Balanced& b);

// Volume by V(2[tet]) = Im sum (-1)^i H(c_i sqrt(delta)); returns V.
double volume_hnice(const Circulants& c);

// The nicev form: sqrt(delta) factored out through the odd part of H.
double volume_nicev(const Circulants& c);

// Volume evaluated through the z-list of g.b; errors with
// needs_log_correction if g.b leaves the FT cell.
double coset_volume(const Balanced& b, const MonomialMap& g);

}  // namespace hyptet
