#include "formulas.hpp"

#include <cmath>

#include "errors.hpp"

namespace hyptet {

std::array<cplx, 8> gamma_vec(const Circulants& c) {
  const cplx A = c[0], B = c[1], C = c[2], D = c[3], E = c[4], F = c[5];
  return {cplx(1.0),     -C * D * E, B * C * E * F, -A * E * F,
          A * C * D * F, -A * B * C, A * B * D * E, -B * D * F};
}

std::array<cplx, 8> gamma_vec_balanced(const Balanced& b) {
  const cplx t = b[0], u = b[1], v = b[2], T = b[3], U = b[4], V = b[5],
             r = b[6];
  return {r, cplx(1.0), r * T * U, t * u, r * T * V, t * v, r * U * V, u * v};
}

std::array<cplx, 8> c_weights(const Circulants& c) {
  MYData d = my_data_raw(c);
  auto gam = gamma_vec(c);
  std::array<cplx, 8> w;
  for (int i = 0; i < 8; ++i) {
    cplx den = d.alpha + gam[size_t(i)] * d.beta;
    if (std::abs(den) < 1e-12)
      throw singular_error("c_weights: alpha + gamma_i beta vanishes");
    w[size_t(i)] = cplx(0.0, -1.0) * gam[size_t(i)] / den;
  }
  return w;
}

double ZList::product_residual() const {
  cplx p = 1.0;
  for (int i = 0; i < 4; ++i) p *= z[size_t(2 * i)] / z[size_t(2 * i + 1)];
  return std::abs(p - 1.0);
}

double ZList::one_minus_product_residual() const {
  cplx p = 1.0;
  for (int i = 0; i < 4; ++i)
    p *= (1.0 - z[size_t(2 * i)]) / (1.0 - z[size_t(2 * i + 1)]);
  return std::abs(p - 1.0);
}

cplx ZList::common_clinant() const { return z[0] / std::conj(z[0]); }

double ZList::clinant_residual() const {
  cplx m = common_clinant();
  double worst = 0.0;
  for (const cplx& zi : z) worst = std::max(worst, std::abs(zi / std::conj(zi) - m));
  return worst;
}

bool ZList::in_ft(double tol) const {
  for (const cplx& zi : z) {
    cplx ratio = z[0] / zi;
    if (!(ratio.real() > tol)) return false;
  }
  return true;
}

ZList z_list(const Balanced& b) {
  require_generic(b, "z_list");
  MYData d = balanced_data(b);
  auto [rho, rho_other] = d.roots();
  // eta / eta^c must equal the magic clinant ((beta^2-delta) - 2i beta
  // sqrt(delta)) / |alpha|^2, which selects eta = (-beta + i sqrt(delta))/alpha.
  cplx eta = rho_other, etac = rho;
  auto gam = gamma_vec(lift_c_from_b(b));
  ZList out;
  for (int i = 0; i < 8; ++i)
    out.z[size_t(i)] =
        (1.0 - gam[size_t(i)] * eta) / (1.0 - gam[size_t(i)] * etac);
  return out;
}

cplx magic_clinant(const Balanced& b) {
  MYData d = balanced_data(b);
  double sq = std::sqrt(d.delta);
  return cplx(d.beta * d.beta - d.delta, -2.0 * d.beta * sq) / std::norm(d.alpha);
}

namespace {

cplx h_of_weight(cplx w) {
  if (std::abs(w.imag()) < 1e-14 && std::abs(w.real()) >= 1.0)
    throw branch_cut_error("volume form: c_i sqrt(delta) on the H cuts");
  return aitch(w);
}

}  // namespace

double volume_hnice(const Circulants& c) {
  require_generic(b_from_c(c), "volume_hnice");
  MYData d = my_data(c);
  auto w = c_weights(c);
  double sq = std::sqrt(d.delta);
  cplx sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    double sign = (i % 2 == 0) ? -1.0 : 1.0;  // (-1)^i with 1-based i
    sum += sign * h_of_weight(w[size_t(i)] * sq);
  }
  return 0.5 * std::imag(sum);
}

double volume_nicev(const Circulants& c) {
  require_generic(b_from_c(c), "volume_nicev");
  MYData d = my_data(c);
  auto w = c_weights(c);
  double sq = std::sqrt(d.delta);
  cplx sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    double sign = (i % 2 == 0) ? -1.0 : 1.0;
    // sqrt(delta)/2 c_i F(delta c_i^2) realized through the odd part of H
    cplx odd_part = 0.25 * (h_of_weight(w[size_t(i)] * sq) -
                            h_of_weight(-w[size_t(i)] * sq));
    sum += sign * odd_part;
  }
  return std::imag(sum);
}

double coset_volume(const Balanced& b, const MonomialMap& g) {
  ZList zl = z_list(g.apply(b));
  if (!zl.in_ft())
    throw needs_log_correction_error(
        "coset_volume: image leaves the FT cell; log corrections not derived");
  cplx sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    double sign = (i % 2 == 0) ? -1.0 : 1.0;
    sum += sign * ell(zl.z[size_t(i)]);
  }
  return 0.5 * std::imag(sum);
}

}  // namespace hyptet
