// dev scratch: pin empirical conventions; not part of the build
#include <cstdio>
#include <random>

#include "formulas.hpp"
#include "klein.hpp"
#include "monomial.hpp"
#include "murakami.hpp"
#include "sampling.hpp"
#include "tetra.hpp"

using namespace hyptet;

int main() {
  std::mt19937_64 rng(42);

  printf("== group orders ==\n");
  printf("full  %zu (want 23040)\n", full_group().order());
  printf("shaded %zu (64)  regge %zu (144)  p %zu (768)  q %zu (1536)  h0 %zu (1152)  h %zu (2304)\n",
         shaded_group().order(), regge_group().order(), p_group().order(),
         q_group().order(), h0_group().order(), h_group().order());

  size_t rmono = 0, ttmono = 0;
  for (auto& w : genericity_monomials()) (w[6] != 0 ? rmono : ttmono)++;
  printf("genericity monomials: r-orbit %zu (16), tT-orbit %zu (30)\n", rmono, ttmono);

  printf("\n== delta invariance over generators ==\n");
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    Balanced b = random_balanced(rng);
    for (auto& g : generators()) {
      double d1 = balanced_data_raw(b).delta;
      double d2 = balanced_data_raw(g.apply(b)).delta;
      worst = std::max(worst, std::abs(d1 - d2));
    }
  }
  printf("worst |delta(gb)-delta(b)| = %.3e\n", worst);

  printf("\n== balanced vs circulant data ==\n");
  worst = 0;
  for (int i = 0; i < 100; ++i) {
    Circulants c = random_circulants(rng);
    MYData d1 = my_data_raw(c);
    MYData d2 = balanced_data_raw(b_from_c(c));
    worst = std::max(worst, std::abs(d1.alpha - d2.alpha) + std::abs(d1.beta - d2.beta));
  }
  printf("worst |alpha,beta mismatch| = %.3e\n", worst);

  printf("\n== oct_data / inter2 ==\n");
  MonomialMap go = g_o();
  double wq = 0, wrho = 0, wlist = 0, woctlem = 0;
  for (int i = 0; i < 50; ++i) {
    Circulants c = random_generic_hyperbolic(rng);
    // explicit octlem formulas
    cplx A = c[0], B = c[1], C = c[2], D = c[3], E = c[4], F = c[5];
    cplx abar = 2.0 * (B / E + A * D + B * E + A * B * B * D + A * B * F +
                       A * B / F + B * C * D + B * D / C);
    cplx bet = A / D + D / A + C / F + F / C + C * F + 1.0 / (F * C) -
               (A * D + 1.0 / (A * D) + B / E + E / B + B * E + 1.0 / (B * E));
    MYData hat = oct_data_raw(c);
    woctlem = std::max(woctlem, std::abs(std::conj(hat.alpha) - abar));
    woctlem = std::max(woctlem, std::abs(cplx(hat.beta) - bet));

    MYData d = my_data(c);
    Balanced gb = go.apply(b_from_c(c));
    Circulants gc = lift_c_from_b(gb);
    MYData hat2 = oct_data(gc);
    if (hat2.rho && d.rho) wrho = std::max(wrho, std::abs(*d.rho - *hat2.rho));
    auto l1 = my_list(c);
    auto l2 = my_list(gc);
    for (int j = 0; j < 8; ++j) wlist = std::max(wlist, std::abs(l1.d[size_t(j)] - l2.d[size_t(j)]));
    wq = std::max(wq, std::abs(holonomy_k(s_from_c(gc), *d.rho)));
  }
  printf("octlem alpha/beta formulas vs quadratic: %.3e\n", woctlem);
  printf("rho(c) vs oct rho(g_o c): %.3e\n", wrho);
  printf("k(s(g_o c), rho(c)): %.3e\n", wq);
  printf("(g_o c)_MY vs (c)_MY: %.3e\n", wlist);

  printf("\n== volume conventions ==\n");
  for (int i = 0; i < 3; ++i) {
    DihedralAngles a = random_finite_angles(rng);
    Circulants c = circulants_from_angles(a);
    double vmy = 0.25 * (my_list(c).volume() + my_list(conj(c)).volume());
    double vkl = numeric_volume(realize(a), 1e-8);
    double vh = volume_hnice(c);
    double vn = volume_nicev(c);
    Balanced b = b_from_c(c);
    double vz = coset_volume(b, MonomialMap::identity());
    printf("klein %.10f  my %.10f  hnice %.10f  nicev %.10f  zlist %.10f\n",
           vkl, vmy, vh, vn, vz);
    Buddies bud = buddies(c);
    printf("  2*vmy %.8f  buddies vol %.8f  holonomy %.2e/%.2e\n", 2 * vmy,
           bud.volume(), bud.first.holonomy_residual(), bud.second.holonomy_residual());
    SuperCoords sc = s_from_c(c);
    auto my8 = oct_my_entries(sc, bud.root_first);
    auto w4 = waist_entries(sc);
    double rhs = 0;
    for (auto zc : my8) rhs += std::imag(dilog(zc));
    for (auto zc : w4) rhs += std::imag(dilog(zc));
    printf("  waist: 2*B(oct1) %.8f  list sum %.8f\n", 2 * bud.first.volume(), rhs);
    ZList zl = z_list(b);
    printf("  zlist: prod %.2e  1-prod %.2e  clin %.2e  |clin-magic| %.2e  ft %d\n",
           zl.product_residual(), zl.one_minus_product_residual(),
           zl.clinant_residual(), std::abs(zl.common_clinant() - magic_clinant(b)),
           int(zl.in_ft()));
    auto ws = c_weights(c);
    MYData d = my_data(c);
    double sq = std::sqrt(d.delta);
    double chain = 0;
    for (int j = 0; j < 8; ++j)
      chain = std::max(chain, std::abs((1.0 - zl.z[size_t(j)]) / (1.0 + zl.z[size_t(j)]) -
                                       (-ws[size_t(j)] * sq)));
    printf("  (1-z)/(1+z) vs -c_i sqrt(delta): %.2e\n", chain);
  }

  printf("\n== orbit 30 ==\n");
  DihedralAngles a = random_finite_angles(rng);
  auto rows = orbit_rows(a, 30);
  int nfin = 0;
  double vworst = 0;
  for (auto& row : rows) {
    if (row.finite) nfin++;
    vworst = std::max(vworst, std::abs(row.volume - rows[0].volume));
  }
  printf("finite %d/30 (want 12), worst dV %.3e\n", nfin, vworst);

  printf("\n== pi/3 checkpoint ==\n");
  DihedralAngles reg({M_PI / 3, M_PI / 3, M_PI / 3, M_PI / 3, M_PI / 3, M_PI / 3});
  Circulants c = circulants_from_angles(reg);
  MYData d = my_data(c);
  cplx m = magic_clinant(b_from_c(c));
  printf("beta %.15f delta %.15f rho (%.15f,%.15f) magic (%.15f,%.15f) -16det %.15f\n",
         d.beta, d.delta, d.rho->real(), d.rho->imag(), m.real(), m.imag(),
         -16.0 * gram_det(gram(reg)));
  return 0;
}
