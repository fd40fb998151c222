// dev scratch: z-list evaluation-point and root-order study
#include <cstdio>
#include <random>

#include "formulas.hpp"
#include "klein.hpp"
#include "monomial.hpp"
#include "murakami.hpp"
#include "sampling.hpp"

using namespace hyptet;

// z-list with all data at p, both root orders.
static std::array<cplx, 8> zl_at(const Balanced& p, bool swap_roots) {
  MYData d = balanced_data(p);
  auto [rho, other] = d.roots();
  cplx eta = swap_roots ? other : rho;
  cplx etac = swap_roots ? rho : other;
  auto gam = gamma_vec(lift_c_from_b(p));
  std::array<cplx, 8> z;
  for (int i = 0; i < 8; ++i)
    z[size_t(i)] = (1.0 - gam[size_t(i)] * eta) / (1.0 - gam[size_t(i)] * etac);
  return z;
}

static bool in_ft(const std::array<cplx, 8>& z) {
  for (auto& zi : z)
    if (!((z[0] / zi).real() > 1e-10)) return false;
  return true;
}

static cplx clin(const std::array<cplx, 8>& z) { return z[0] / std::conj(z[0]); }

static double vol_abs(const std::array<cplx, 8>& z) {
  cplx sum = 0;
  for (int i = 0; i < 8; ++i) {
    double sign = (i % 2 == 0) ? -1.0 : 1.0;
    sum += sign * ell(z[size_t(i)]);
  }
  return 0.5 * std::imag(sum);
}

int main() {
  std::mt19937_64 rng(4242);
  MonomialMap goi = g_o().inverse();

  for (int trial = 0; trial < 3; ++trial) {
    DihedralAngles a = random_finite_angles(rng);
    Circulants c = circulants_from_angles(a);
    Balanced b = b_from_c(c);
    double vmy = 0.25 * (my_list(c).volume() + my_list(conj(c)).volume());
    double vkl = numeric_volume(realize(a), 1e-8);
    cplx m = magic_clinant(b);
    printf("trial %d: vmy %.9f vkl %.9f m=(%.6f,%.6f)\n", trial, vmy, vkl,
           m.real(), m.imag());
    for (bool shift : {false, true}) {
      for (bool swap : {false, true}) {
        Balanced p = shift ? goi.apply(b) : b;
        auto z = zl_at(p, swap);
        cplx cl = clin(z);
        printf("  shift=%d swap=%d ft=%d clin=(%.6f,%.6f) |cl-m|=%.2e |cl-conj(m)|=%.2e vol=%.9f\n",
               int(shift), int(swap), int(in_ft(z)), cl.real(), cl.imag(),
               std::abs(cl - m), std::abs(cl - std::conj(m)), vol_abs(z));
      }
    }
  }

  printf("\n== all 10 formula reps, deggy eval, both swaps ==\n");
  DihedralAngles a = random_finite_angles(rng);
  Circulants c = circulants_from_angles(a);
  Balanced b = b_from_c(c);
  double vmy = 0.25 * (my_list(c).volume() + my_list(conj(c)).volume());
  printf("vmy = %.9f\n", vmy);
  auto reps = formula_reps10();
  for (size_t i = 0; i < reps.size(); ++i) {
    Balanced gb = reps[i].apply(b);
    for (bool swap : {false, true}) {
      Balanced p = goi.apply(gb);
      auto z = zl_at(p, swap);
      printf("  rep %zu swap=%d ft=%d vol=%.9f\n", i, int(swap), int(in_ft(z)),
             vol_abs(z));
    }
  }

  printf("\n== matching classes of the 10 reps (finite image?) ==\n");
  for (size_t i = 0; i < reps.size(); ++i) {
    Balanced gb = reps[i].apply(b);
    printf("  rep %zu finite=%d\n", i, int(is_finite(lift_c_from_b(gb))));
  }
  return 0;
}
