#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "errors.hpp"
#include "formulas.hpp"
#include "klein.hpp"
#include "monomial.hpp"
#include "murakami.hpp"
#include "sampling.hpp"
#include "tetra.hpp"

namespace hyptet {

namespace {

struct Suite {
  SuiteResult result;
  double tol_override;

  void check(const std::string& name, double residual, double tol) {
    if (tol_override > 0.0) tol = tol_override;
    result.checks.push_back({name, residual, tol, residual <= tol});
  }
  void check_count(const std::string& name, size_t got, size_t want) {
    result.checks.push_back(
        {name + " = " + std::to_string(got) + " (want " + std::to_string(want) + ")",
         double(got > want ? got - want : want - got), 0.0, got == want});
  }
};

cplx random_off_cut(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> ur(rmin, rmax);
  std::uniform_real_distribution<double> ua(0.0, 2.0 * M_PI);
  for (;;) {
    cplx z = std::polar(ur(rng), ua(rng));
    if (std::abs(z.imag()) < 1e-6 && z.real() <= 0.0) continue;
    return z;
  }
}

void suite_identities(Suite& s, std::mt19937_64& rng, int trials) {
  if (trials <= 0) trials = 1000;
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    cplx z = random_off_cut(rng, 0.1, 10.0);
    cplx lz = std::log(z);
    worst = std::max(worst, std::abs(dilog(1.0 - 1.0 / z) + dilog(1.0 - z) + 0.5 * lz * lz));
  }
  s.check("dilog inversion identity", worst, 1e-12);

  worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    cplx z = random_off_cut(rng, 0.1, 10.0);
    worst = std::max(worst, std::abs(ell(1.0 / z) + ell(z)));
  }
  s.check("ell(1/z) = -ell(z)", worst, 1e-12);

  worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    cplx z = random_off_cut(rng, 0.2, 5.0);
    worst = std::max(worst, std::abs(kay(z) - ell(z)));
  }
  s.check("kay = ell", worst, 1e-12);

  worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    cplx w = random_off_cut(rng, 0.01, 3.0);
    if (std::abs(w.imag()) < 1e-6 && std::abs(w.real()) >= 1.0) continue;
    worst = std::max(worst, std::abs(aitch(-w) + aitch(w)));
  }
  s.check("aitch odd", worst, 1e-12);

  std::uniform_real_distribution<double> u(-8.0, 8.0);
  worst = 0.0;
  for (int i = 0; i < std::max(100, trials / 10); ++i) {
    double th = u(rng);
    worst = std::max(worst,
                     std::abs(std::imag(dilog(std::polar(1.0, 2.0 * th))) -
                              2.0 * lobachevsky(th)));
  }
  s.check("Im Li2(e^{2i theta}) = 2 Lambda(theta)", worst, 1e-12);

  worst = 0.0;
  for (int i = 0; i < std::max(100, trials / 10); ++i) {
    double x = u(rng);
    worst = std::max(worst, std::abs(lobachevsky(x + M_PI) - lobachevsky(x)));
    worst = std::max(worst, std::abs(lobachevsky(-x) + lobachevsky(x)));
  }
  s.check("Lambda odd and pi-periodic", worst, 1e-14);

  worst = 0.0;
  for (int i = 0; i < std::max(100, trials / 10); ++i) {
    cplx z = random_off_cut(rng, 0.05, 6.0);
    if (std::abs(z - 1.0) < 1e-3) continue;
    worst = std::max(worst, std::abs(bloch_wigner(std::conj(z)) + bloch_wigner(z)));
  }
  s.check("bloch_wigner mirror antisymmetry", worst, 1e-13);
}

void suite_group(Suite& s) {
  s.check_count("order of the full group", full_group().order(), 23040);
  s.check_count("order of the shaded subgroup", shaded_group().order(), 64);
  s.check_count("order of the Regge subgroup", regge_group().order(), 144);
  s.check_count("order of P (flips + rotations)", p_group().order(), 768);
  s.check_count("order of H0", h0_group().order(), 1152);
  s.check_count("order of H (magic-clinant stabilizer)", h_group().order(), 2304);

  auto reps15 = scissors_reps15();
  auto reps30 = scissors_reps30();
  auto reps10 = formula_reps10();
  s.check_count("scissors representatives", reps15.size(), 15);
  s.check_count("scissors representatives with mirrors", reps30.size(), 30);
  s.check_count("formula representatives", reps10.size(), 10);

  size_t bad = 0;
  for (size_t i = 0; i < reps30.size(); ++i)
    for (size_t j = i + 1; j < reps30.size(); ++j)
      if (p_group().contains(reps30[j].inverse().compose(reps30[i]))) ++bad;
  s.check_count("coincident P-cosets among the 30", bad, 0);

  bad = 0;
  for (size_t i = 0; i < reps15.size(); ++i)
    for (size_t j = i + 1; j < reps15.size(); ++j)
      if (q_group().contains(reps15[j].inverse().compose(reps15[i]))) ++bad;
  s.check_count("coincident mirror-classes among the 15", bad, 0);

  bad = 0;
  for (size_t i = 0; i < reps10.size(); ++i)
    for (size_t j = i + 1; j < reps10.size(); ++j)
      if (h_group().contains(reps10[i].compose(reps10[j].inverse()))) ++bad;
  s.check_count("coincident H-cosets among the 10", bad, 0);

  size_t rcount = 0, ttcount = 0;
  for (const auto& w : genericity_monomials())
    (w[6] != 0 ? rcount : ttcount)++;
  s.check_count("genericity monomials from r", rcount, 16);
  s.check_count("genericity monomials from tT", ttcount, 30);

  // every element is an even signed permutation with the forced r row
  size_t invalid = 0;
  for (const auto& g : full_group().elements())
    if (!g.valid()) ++invalid;
  s.check_count("non-canonical table entries", invalid, 0);
}

void suite_coords(Suite& s, std::mt19937_64& rng, int trials) {
  if (trials <= 0) trials = 100;
  double worst_cover = 0.0, worst_lift = 0.0, worst_deck = 0.0, worst_unit = 0.0;
  for (int i = 0; i < trials; ++i) {
    Circulants c = random_circulants(rng);
    SuperCoords s1 = s_from_c(c);
    SuperCoords s2 = s_from_b(b_from_c(c));
    for (int j = 0; j < 6; ++j)
      worst_cover = std::max(worst_cover, std::abs(s1.clin[size_t(j)] - s2.clin[size_t(j)]));
    for (int j = 0; j < 4; ++j)
      worst_cover = std::max(worst_cover, std::abs(s1.root[size_t(j)] - s2.root[size_t(j)]));
    worst_unit = std::max(worst_unit, s1.residual());
    worst_unit = std::max(worst_unit, b_from_c(c).residual());

    Balanced b = b_from_c(c);
    Circulants lc = lift_c_from_b(b);
    Balanced b2 = b_from_c(lc);
    for (int j = 0; j < 7; ++j)
      worst_lift = std::max(worst_lift, std::abs(b[j] - b2[j]));

    for (const auto& neg : DeckElement::neg_elements()) {
      Balanced lhs = b_from_c(apply_deck(neg, c));
      Balanced rhs = apply_deck_balanced(b_from_c(c));
      for (int j = 0; j < 7; ++j)
        worst_deck = std::max(worst_deck, std::abs(lhs[j] - rhs[j]));
    }
  }
  s.check("cover chain s(b(c)) = s(c)", worst_cover, 1e-12);
  s.check("constraint residuals by construction", worst_unit, 1e-12);
  s.check("lift round trip b -> c -> b", worst_lift, 1e-12);
  s.check("b(Neg c) = D b(c)", worst_deck, 1e-12);
}

void suite_quadratic(Suite& s, std::mt19937_64& rng, int trials) {
  if (trials <= 0) trials = 100;
  double worst_rho = 0.0, worst_h = 0.0, worst_fact = 0.0, worst_delta = 0.0;
  double worst_gram = 0.0, worst_root_margin = 1.0;
  for (int i = 0; i < trials; ++i) {
    Circulants c = random_generic_hyperbolic(rng);
    MYData d = my_data(c);
    worst_rho = std::max(worst_rho, std::abs(std::abs(*d.rho) - 1.0));
    worst_h = std::max(worst_h, std::abs(h_poly(c, *d.rho)));
    cplx z = random_off_cut(rng, 0.3, 2.0);
    worst_fact = std::max(worst_fact, std::abs(h_poly(c, z) - h_poly_factored(c, z)));

    DihedralAngles a = angles_from_circulants(c);
    double delta_gram = -16.0 * gram_det(gram(a));
    worst_gram = std::max(worst_gram,
                          std::abs(d.delta - delta_gram) / (1.0 + std::abs(d.delta)));
  }
  s.check("|rho| = 1", worst_rho, 1e-12);
  s.check("h(c, rho) = 0", worst_h, 1e-9);
  s.check("h monomial vs factored form", worst_fact, 1e-9);
  s.check("delta = -16 det(Gram)", worst_gram, 1e-8);

  for (int i = 0; i < trials; ++i) {
    Circulants c = random_nonhyperbolic(rng);
    auto [r1, r2] = my_data_raw(c).roots();
    worst_root_margin = std::min(worst_root_margin,
                                 std::min(std::abs(std::abs(r1) - 1.0),
                                          std::abs(std::abs(r2) - 1.0)));
  }
  s.check("delta < 0 roots stay off the unit circle (1e-6 margin, inverted)",
          worst_root_margin < 1e-6 ? 1.0 : 0.0, 0.5);

  for (int i = 0; i < trials; ++i) {
    Balanced b = random_balanced(rng);
    MYData d = balanced_data_raw(b);
    auto gens = generators();
    const MonomialMap& g = gens[size_t(i % 12)];
    MYData dg = balanced_data_raw(g.apply(b));
    worst_delta = std::max(worst_delta, std::abs(d.delta - dg.delta));
  }
  s.check("delta invariance under the generators", worst_delta, 1e-11);

  double worst_inter = 0.0, worst_list = 0.0;
  MonomialMap go = g_o();
  for (int i = 0; i < std::max(10, trials / 2); ++i) {
    Circulants c = random_generic_hyperbolic(rng);
    MYData d = my_data(c);
    Balanced gb = go.apply(b_from_c(c));
    Circulants gc = lift_c_from_b(gb);
    MYData hat = oct_data(gc);
    worst_inter = std::max(worst_inter, std::abs(*d.rho - *hat.rho));
    auto l1 = my_list(c);
    auto l2 = my_list(gc);
    for (size_t j = 0; j < 8; ++j)
      worst_list = std::max(worst_list, std::abs(l1.d[j] - l2.d[j]));
  }
  s.check("rho(c) = oct rho(g_o c)", worst_inter, 1e-10);
  s.check("(g_o c)_MY = (c)_MY", worst_list, 1e-10);
}

void suite_zlist(Suite& s, std::mt19937_64& rng, int trials) {
  if (trials <= 0) trials = 100;
  double worst_p = 0.0, worst_q = 0.0, worst_cl = 0.0, worst_m = 0.0, worst_ft = 0.0;
  for (int i = 0; i < trials; ++i) {
    Circulants c = random_generic_hyperbolic(rng);
    Balanced b = b_from_c(c);
    ZList zl = z_list(b);
    worst_p = std::max(worst_p, zl.product_residual());
    worst_q = std::max(worst_q, zl.one_minus_product_residual());
    worst_cl = std::max(worst_cl, zl.clinant_residual());
    worst_m = std::max(worst_m, std::abs(zl.common_clinant() - magic_clinant(b)));
  }
  s.check("DT product constraint", worst_p, 1e-9);
  s.check("DT (1-z) product constraint", worst_q, 1e-9);
  s.check("common clinant", worst_cl, 1e-9);
  s.check("common clinant = magic clinant", worst_m, 1e-10);

  for (int i = 0; i < std::max(10, trials / 5); ++i) {
    DihedralAngles a = random_finite_angles(rng);
    ZList zl = z_list(b_from_c(circulants_from_angles(a)));
    worst_ft = std::max(worst_ft, zl.in_ft() ? 0.0 : 1.0);
  }
  s.check("finite tetrahedra land in FT", worst_ft, 0.5);
}

void suite_volumes(Suite& s, std::mt19937_64& rng, int trials) {
  if (trials <= 0) trials = 20;
  double worst_pair = 0.0, worst_buddy = 0.0, worst_waist = 0.0;
  for (int i = 0; i < trials; ++i) {
    DihedralAngles a = random_finite_angles(rng);
    Circulants c = circulants_from_angles(a);
    double vmy = volume_my(c);
    double vh = volume_hnice(c);
    double vn = volume_nicev(c);
    worst_pair = std::max(worst_pair, std::abs(vmy - vh));
    worst_pair = std::max(worst_pair, std::abs(vmy - vn));
    Balanced b = b_from_c(c);
    for (const auto& g : formula_reps10())
      worst_pair = std::max(worst_pair, std::abs(vmy - coset_volume(b, g)));

    Buddies bud = buddies(c);
    worst_buddy = std::max(worst_buddy, std::abs(2.0 * vmy - bud.volume()));
    worst_buddy = std::max(worst_buddy, bud.first.holonomy_residual());
    worst_buddy = std::max(worst_buddy, bud.second.holonomy_residual());

    SuperCoords sc = s_from_c(c);
    auto my8 = oct_my_entries(sc, bud.root_first);
    auto w4 = waist_entries(sc);
    double lhs = 2.0 * bud.first.volume();
    double rhs = 0.0;
    for (auto zc : my8) rhs += std::imag(dilog(zc));
    for (auto zc : w4) rhs += std::imag(dilog(zc));
    worst_waist = std::max(worst_waist, std::abs(lhs - rhs));
  }
  s.check("formula agreement (MY, hnice, nicev, 10 cosets)", worst_pair, 1e-8);
  s.check("octahedral buddies: 2 V = sum B(w)", worst_buddy, 1e-8);
  s.check("waist identity per octahedron", worst_waist, 1e-9);

  double worst_orbit = 0.0;
  size_t finite_bad = 0;
  int orbit_trials = std::max(2, trials / 4);
  for (int i = 0; i < orbit_trials; ++i) {
    DihedralAngles a = random_finite_angles(rng);
    auto rows = orbit_rows(a, 30);
    double v0 = rows[0].volume;
    size_t nfin = 0;
    for (const auto& row : rows) {
      worst_orbit = std::max(worst_orbit, std::abs(row.volume - v0));
      if (row.finite) ++nfin;
    }
    if (nfin != 12) ++finite_bad;
  }
  s.check("30 scissors-coset volumes agree", worst_orbit, 1e-9);
  s.check_count("orbits with finite count != 12", finite_bad, 0);
}

void suite_oracle(Suite& s, std::mt19937_64& rng, int trials) {
  if (trials <= 0) trials = 5;
  double worst = 0.0, worst_rt = 0.0;
  for (int i = 0; i < trials; ++i) {
    DihedralAngles a = random_finite_angles(rng);
    KleinTet k = realize(a);
    DihedralAngles back = angles_from_klein(k);
    for (int e = 0; e < 6; ++e)
      worst_rt = std::max(worst_rt, std::abs(back[e] - a[e]));
    double vk = numeric_volume(k, 1e-7);
    double vm = volume_my(a);
    worst = std::max(worst, std::abs(vk - vm));
  }
  s.check("realize angle round-trip", worst_rt, 1e-9);
  s.check("|V_MY - V_Klein|", worst, 1e-6);
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"group", "identities", "coords", "quadratic", "zlist", "volumes",
          "oracle", "all"};
}

SuiteResult run_suite(const std::string& suite, std::uint64_t seed, int trials,
                      double tol_override) {
  Suite s;
  s.result.suite = suite;
  s.tol_override = tol_override;
  std::mt19937_64 rng(seed);

  bool all = suite == "all";
  bool known = all;
  if (all || suite == "group") known = true, suite_group(s);
  if (all || suite == "identities") known = true, suite_identities(s, rng, trials);
  if (all || suite == "coords") known = true, suite_coords(s, rng, trials);
  if (all || suite == "quadratic") known = true, suite_quadratic(s, rng, trials);
  if (all || suite == "zlist") known = true, suite_zlist(s, rng, trials);
  if (all || suite == "volumes") known = true, suite_volumes(s, rng, trials);
  if (all || suite == "oracle") known = true, suite_oracle(s, rng, trials);
  if (!known) throw error(status::invalid_argument, "unknown suite: " + suite);

  s.result.pass = std::all_of(s.result.checks.begin(), s.result.checks.end(),
                              [](const Check& c) { return c.pass; });
  return s.result;
}

}  // namespace hyptet
