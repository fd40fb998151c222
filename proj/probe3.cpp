// dev scratch: isolate MY-vs-oracle disagreement
#include <cstdio>
#include <random>

#include "formulas.hpp"
#include "klein.hpp"
#include "monomial.hpp"
#include "murakami.hpp"
#include "sampling.hpp"

using namespace hyptet;

int main() {
  std::mt19937_64 rng(7);

  printf("== gram vs delta (labeling check) ==\n");
  double worst = 0;
  for (int i = 0; i < 300; ++i) {
    Circulants c = random_circulants(rng);
    double delta = my_data_raw(c).delta;
    double dg = -16.0 * gram_det(gram(angles_from_circulants(c)));
    worst = std::max(worst, std::abs(delta - dg) / (1 + std::abs(delta)));
  }
  printf("worst rel |delta + 16 det| = %.3e\n", worst);

  printf("\n== oracle sanity ==\n");
  {
    double s = 5e-4;
    KleinTet tiny{{Vec3{0, 0, 0}, Vec3{s, 0, 0}, Vec3{0, s, 0}, Vec3{0, 0, s}}};
    double ev = s * s * s / 6.0;
    double hv = numeric_volume(tiny, 1e-16);
    printf("tiny: euclid %.6e hyp %.6e rel diff %.2e\n", ev, hv, (hv - ev) / ev);
  }
  {
    KleinTet k = random_klein_tet(rng);
    double va = numeric_volume(k, 1e-9);
    double vm = numeric_volume_mc(k, 20000000, 99);
    printf("random: adaptive %.9f mc %.9f diff %.2e\n", va, vm, va - vm);
  }

  printf("\n== MY vs Lobachevsky ideal limit ==\n");
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    double th = M_PI / 3 + eps;
    DihedralAngles a({th, th, th, th, th, th});
    Circulants c = circulants_from_angles(a);
    double vmy = 0.25 * (my_list(c).volume() + my_list(conj(c)).volume());
    printf("eps=%.0e vmy=%.9f (regular ideal = 1.014941606)\n", eps, vmy);
  }

  printf("\n== MY vs oracle with angle recovery check ==\n");
  for (int i = 0; i < 5; ++i) {
    KleinTet k = random_klein_tet(rng);
    DihedralAngles a = angles_from_klein(k);
    double vkl = numeric_volume(k, 1e-9);
    Circulants c = circulants_from_angles(a);
    double vmy = 0.25 * (my_list(c).volume() + my_list(conj(c)).volume());
    // also try realize() on these angles and integrate that
    double vkl2 = numeric_volume(realize(a), 1e-9);
    printf("vkl %.9f vkl(realized) %.9f vmy %.9f\n", vkl, vkl2, vmy);
  }
  return 0;
}
