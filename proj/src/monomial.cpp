#include "monomial.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <sstream>

#include "errors.hpp"

namespace hyptet {

namespace {

const char kLetters[8] = "tuvTUVr";

std::string key_of(const MonomialMap& g) {
  return std::string(reinterpret_cast<const char*>(g.m.data()), g.m.size());
}

// Exponent vector of (prod of new lower) / (prod of new upper) / (tuv/(TUV)).
std::array<int, 6> constraint_ratio(const std::array<int, 6>& perm,
                                    const std::array<int, 6>& sign) {
  std::array<int, 6> e{};
  for (int i = 0; i < 3; ++i) e[size_t(perm[size_t(i)])] += sign[size_t(i)];
  for (int i = 3; i < 6; ++i) e[size_t(perm[size_t(i)])] -= sign[size_t(i)];
  const int base[6] = {1, 1, 1, -1, -1, -1};
  for (int j = 0; j < 6; ++j) e[size_t(j)] -= base[j];
  return e;
}

}  // namespace

MonomialMap MonomialMap::identity() {
  MonomialMap g;
  for (int i = 0; i < 7; ++i) g.set(i, i, 1);
  return g;
}

MonomialMap MonomialMap::compose(const MonomialMap& rhs) const {
  MonomialMap out;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      int acc = 0;
      for (int k = 0; k < 7; ++k) acc += at(i, k) * rhs.at(k, j);
      out.set(i, j, acc);
    }
  return out;
}

MonomialMap MonomialMap::inverse() const {
  // Block structure [S 0; w 1]: inverse is [S^T 0; -w S^T 1].
  MonomialMap out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out.set(i, j, at(j, i));
  for (int j = 0; j < 6; ++j) {
    int acc = 0;
    for (int k = 0; k < 6; ++k) acc += at(6, k) * out.at(k, j);
    out.set(6, j, -acc);
  }
  out.set(6, 6, 1);
  return out;
}

Balanced MonomialMap::apply(const Balanced& b) const {
  Balanced out;
  for (int i = 0; i < 7; ++i) {
    cplx acc = 1.0;
    for (int j = 0; j < 7; ++j) {
      int e = at(i, j);
      if (e == 0) continue;
      cplx base = e > 0 ? b[j] : 1.0 / b[j];
      for (int k = 0; k < std::abs(e); ++k) acc *= base;
    }
    out[i] = acc;
  }
  return out;
}

bool MonomialMap::valid() const {
  std::array<int, 6> perm{}, sign{};
  std::array<bool, 6> used{};
  int negs = 0;
  for (int i = 0; i < 6; ++i) {
    if (at(i, 6) != 0) return false;
    int nz = -1;
    for (int j = 0; j < 6; ++j) {
      if (at(i, j) == 0) continue;
      if (nz >= 0 || std::abs(at(i, j)) != 1) return false;
      nz = j;
    }
    if (nz < 0 || used[size_t(nz)]) return false;
    used[size_t(nz)] = true;
    perm[size_t(i)] = nz;
    sign[size_t(i)] = at(i, nz);
    if (sign[size_t(i)] < 0) ++negs;
  }
  if (negs % 2 != 0) return false;
  if (at(6, 6) != 1) return false;
  auto ratio = constraint_ratio(perm, sign);
  for (int j = 0; j < 6; ++j) {
    if (ratio[size_t(j)] % 2 != 0) return false;
    if (at(6, j) != ratio[size_t(j)] / 2) return false;
  }
  return true;
}

std::string MonomialMap::describe() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 6; ++i) {
    if (i) os << ",";
    for (int j = 0; j < 6; ++j) {
      if (at(i, j) == 1) os << kLetters[j];
      if (at(i, j) == -1) os << "~" << kLetters[j];
    }
  }
  os << "; ";
  MonomialVec w{};
  for (int j = 0; j < 7; ++j) w[size_t(j)] = at(6, j);
  os << monomial_spelling(w) << "]";
  return os.str();
}

MonomialVec monomial_pullback(const MonomialMap& g, const MonomialVec& w) {
  MonomialVec out{};
  for (int j = 0; j < 7; ++j) {
    int acc = 0;
    for (int i = 0; i < 7; ++i) acc += g.at(i, j) * w[size_t(i)];
    out[size_t(j)] = acc;
  }
  return out;
}

MonomialVec monomial_canonical(const MonomialVec& w_in) {
  // relation vector: t u v T^-1 U^-1 V^-1 r^-2 = 1
  static const MonomialVec rel = {1, 1, 1, -1, -1, -1, -2};
  auto reduce = [](MonomialVec w) {
    while (w[6] > 1)
      for (int j = 0; j < 7; ++j) w[size_t(j)] += rel[size_t(j)];
    while (w[6] < 0)
      for (int j = 0; j < 7; ++j) w[size_t(j)] -= rel[size_t(j)];
    return w;
  };
  MonomialVec a = reduce(w_in);
  MonomialVec b{};
  for (int j = 0; j < 7; ++j) b[size_t(j)] = -w_in[size_t(j)];
  b = reduce(b);
  return std::min(a, b);
}

cplx monomial_eval(const MonomialVec& w, const Balanced& b) {
  cplx acc = 1.0;
  for (int j = 0; j < 7; ++j) {
    int e = w[size_t(j)];
    if (e == 0) continue;
    cplx base = e > 0 ? b[j] : 1.0 / b[j];
    for (int k = 0; k < std::abs(e); ++k) acc *= base;
  }
  return acc;
}

std::string monomial_spelling(const MonomialVec& w) {
  std::string num, den;
  for (int j = 0; j < 7; ++j) {
    for (int k = 0; k < w[size_t(j)]; ++k) num += kLetters[j];
    for (int k = 0; k < -w[size_t(j)]; ++k) den += kLetters[j];
  }
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  return num + "/" + den;
}

std::optional<MonomialMap> from_signed_perm(const std::array<int, 6>& perm,
                                            const std::array<int, 6>& sign) {
  MonomialMap g;
  for (int i = 0; i < 6; ++i) g.set(i, perm[size_t(i)], sign[size_t(i)]);
  auto ratio = constraint_ratio(perm, sign);
  for (int j = 0; j < 6; ++j) {
    if (ratio[size_t(j)] % 2 != 0) return std::nullopt;
    g.set(6, j, ratio[size_t(j)] / 2);
  }
  g.set(6, 6, 1);
  if (!g.valid()) return std::nullopt;
  return g;
}

namespace {

MonomialMap must(const std::array<int, 6>& perm, const std::array<int, 6>& sign) {
  auto g = from_signed_perm(perm, sign);
  if (!g) throw error(status::internal, "generator is not a group element");
  return *g;
}

}  // namespace

const std::array<MonomialMap, 12>& generators() {
  static const std::array<MonomialMap, 12> gens = [] {
    std::array<MonomialMap, 12> g = {
        // shaded: swap / conjugate-swap within each pair
        must({3, 1, 2, 0, 4, 5}, {1, 1, 1, 1, 1, 1}),     // [T,u,v,t,U,V; T~t r]
        must({0, 4, 2, 3, 1, 5}, {1, 1, 1, 1, 1, 1}),     // [t,U,v,T,u,V; U~u r]
        must({0, 1, 5, 3, 4, 2}, {1, 1, 1, 1, 1, 1}),     // [t,u,V,T,U,v; V~v r]
        must({3, 1, 2, 0, 4, 5}, {-1, 1, 1, -1, 1, 1}),   // [~T,u,v,~t,U,V; r]
        must({0, 4, 2, 3, 1, 5}, {1, -1, 1, 1, -1, 1}),   // [t,~U,v,T,~u,V; r]
        must({0, 1, 5, 3, 4, 2}, {1, 1, -1, 1, 1, -1}),   // [t,u,~V,T,U,~v; r]
        // unshaded: swap / conjugate-swap across pairs
        must({4, 1, 2, 3, 0, 5}, {1, 1, 1, 1, 1, 1}),     // [U,u,v,T,t,V; U~t r]
        must({4, 1, 2, 3, 0, 5}, {-1, 1, 1, 1, -1, 1}),   // [~U,u,v,T,~t,V; r]
        must({0, 5, 2, 3, 4, 1}, {1, 1, 1, 1, 1, 1}),     // [t,V,v,T,U,u; V~u r]
        must({0, 5, 2, 3, 4, 1}, {1, -1, 1, 1, 1, -1}),   // [t,~V,v,T,U,~u; r]
        must({0, 1, 3, 2, 4, 5}, {1, 1, 1, 1, 1, 1}),     // [t,u,T,v,U,V; T~v r]
        must({0, 1, 3, 2, 4, 5}, {1, 1, -1, -1, 1, 1}),   // [t,u,~T,~v,U,V; r]
    };
    return g;
  }();
  return gens;
}

MonomialMap g_o() {
  // (t,u,v,T,U,V;r) -> (~t, ~v, V, ~T, u, ~U; ~t~u~v TUV r); this matches the
  // angle-data action (-A, -S, E+F-S, -D, B+E-S, B+F-S) with S=(B+C+E+F)/2.
  static const MonomialMap g =
      must({0, 2, 5, 3, 1, 4}, {-1, -1, 1, -1, 1, -1});
  return g;
}

MonomialMap regge_gr() {
  // (A, S-B, S-C, D, S-E, S-F) lifts to [t,v,u,T,~U,~V; UVr].
  static const MonomialMap g = must({0, 2, 1, 3, 4, 5}, {1, 1, 1, 1, -1, -1});
  return g;
}

MonomialMap mirror_map() {
  // swap the (t,T) and (u,U) pairs: an orientation-reversing relabeling
  static const MonomialMap g = must({1, 0, 2, 4, 3, 5}, {1, 1, 1, 1, 1, 1});
  return g;
}

GroupTable GroupTable::closure(const std::vector<MonomialMap>& gens) {
  GroupTable t;
  std::unordered_map<std::string, size_t> seen;
  std::deque<MonomialMap> todo;
  MonomialMap id = MonomialMap::identity();
  seen.emplace(key_of(id), 0);
  t.elems_.push_back(id);
  todo.push_back(id);
  while (!todo.empty()) {
    MonomialMap cur = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      MonomialMap next = cur.compose(g);
      auto [it, inserted] = seen.emplace(key_of(next), t.elems_.size());
      if (inserted) {
        t.elems_.push_back(next);
        todo.push_back(next);
      }
    }
  }
  std::sort(t.elems_.begin(), t.elems_.end());
  t.index_.clear();
  for (size_t i = 0; i < t.elems_.size(); ++i) t.index_.emplace(key_of(t.elems_[i]), i);
  return t;
}

bool GroupTable::contains(const MonomialMap& g) const {
  return index_.count(key_of(g)) != 0;
}

void GroupTable::write_csv(std::ostream& os) const {
  for (const auto& g : elems_) {
    for (size_t k = 0; k < g.m.size(); ++k) {
      if (k) os << ",";
      os << int(g.m[k]);
    }
    os << "\n";
  }
}

namespace {

std::vector<MonomialMap> tetrahedral_rotation_gens() {
  return {
      must({1, 2, 0, 4, 5, 3}, {1, 1, 1, 1, 1, 1}),      // cycle the pairs
      must({0, 1, 2, 3, 4, 5}, {1, 1, 1, -1, -1, 1}),    // conjugate T,U
  };
}

std::vector<MonomialMap> h0_gens() {
  return {
      must({1, 0, 2, 3, 4, 5}, {1, 1, 1, 1, 1, 1}),      // swap t,u
      must({1, 2, 0, 3, 4, 5}, {1, 1, 1, 1, 1, 1}),      // cycle t,u,v
      must({0, 1, 2, 4, 3, 5}, {1, 1, 1, 1, 1, 1}),      // swap T,U
      must({0, 1, 2, 4, 5, 3}, {1, 1, 1, 1, 1, 1}),      // cycle T,U,V
      must({0, 1, 2, 3, 4, 5}, {-1, -1, 1, 1, 1, 1}),    // conj t,u
      must({0, 1, 2, 3, 4, 5}, {1, -1, -1, 1, 1, 1}),    // conj u,v
      must({0, 1, 2, 3, 4, 5}, {1, 1, -1, -1, 1, 1}),    // conj v,T
      must({0, 1, 2, 3, 4, 5}, {1, 1, 1, -1, -1, 1}),    // conj T,U
      must({0, 1, 2, 3, 4, 5}, {1, 1, 1, 1, -1, -1}),    // conj U,V
  };
}

MonomialMap swap_all_pairs() {
  return must({3, 4, 5, 0, 1, 2}, {1, 1, 1, 1, 1, 1});
}

}  // namespace

const GroupTable& full_group() {
  static const GroupTable t = [] {
    auto g = generators();
    return GroupTable::closure(std::vector<MonomialMap>(g.begin(), g.end()));
  }();
  return t;
}

const GroupTable& shaded_group() {
  static const GroupTable t = [] {
    auto g = generators();
    return GroupTable::closure(std::vector<MonomialMap>(g.begin(), g.begin() + 6));
  }();
  return t;
}

const GroupTable& regge_group() {
  static const GroupTable t = [] {
    auto gens = tetrahedral_rotation_gens();
    gens.push_back(mirror_map());  // full tetrahedral symmetries incl. reflections
    gens.push_back(regge_gr());
    return GroupTable::closure(gens);
  }();
  return t;
}

const GroupTable& p_group() {
  static const GroupTable t = [] {
    auto g = generators();
    std::vector<MonomialMap> gens(g.begin(), g.begin() + 6);
    for (auto& x : tetrahedral_rotation_gens()) gens.push_back(x);
    return GroupTable::closure(gens);
  }();
  return t;
}

const GroupTable& q_group() {
  static const GroupTable t = [] {
    auto g = generators();
    std::vector<MonomialMap> gens(g.begin(), g.begin() + 6);
    for (auto& x : tetrahedral_rotation_gens()) gens.push_back(x);
    gens.push_back(mirror_map());
    return GroupTable::closure(gens);
  }();
  return t;
}

const GroupTable& h0_group() {
  static const GroupTable t = GroupTable::closure(h0_gens());
  return t;
}

const GroupTable& h_group() {
  static const GroupTable t = [] {
    auto gens = h0_gens();
    gens.push_back(swap_all_pairs());
    return GroupTable::closure(gens);
  }();
  return t;
}

std::vector<std::string> subgroup_names() {
  return {"full", "shaded", "regge", "p", "q", "h0", "h"};
}

const GroupTable& subgroup(const std::string& name) {
  if (name == "full") return full_group();
  if (name == "shaded") return shaded_group();
  if (name == "regge") return regge_group();
  if (name == "p") return p_group();
  if (name == "q") return q_group();
  if (name == "h0") return h0_group();
  if (name == "h") return h_group();
  throw error(status::invalid_argument, "unknown subgroup: " + name);
}

std::vector<MonomialMap> scissors_reps15() {
  std::vector<MonomialMap> reps;
  // SR: permutations of the upper-case coordinates (identity included)
  reps.push_back(MonomialMap::identity());
  reps.push_back(must({0, 1, 2, 3, 5, 4}, {1, 1, 1, 1, 1, 1}));  // tuvTVU
  reps.push_back(must({0, 1, 2, 4, 3, 5}, {1, 1, 1, 1, 1, 1}));  // tuvUTV
  reps.push_back(must({0, 1, 2, 4, 5, 3}, {1, 1, 1, 1, 1, 1}));  // tuvUVT
  reps.push_back(must({0, 1, 2, 5, 3, 4}, {1, 1, 1, 1, 1, 1}));  // tuvVTU
  reps.push_back(must({0, 1, 2, 5, 4, 3}, {1, 1, 1, 1, 1, 1}));  // tuvVUT
  // SN
  reps.push_back(must({0, 1, 3, 2, 5, 4}, {1, 1, 1, 1, 1, 1}));  // tuTvVU
  reps.push_back(must({0, 1, 3, 2, 4, 5}, {1, 1, 1, 1, 1, 1}));  // tuTvUV
  reps.push_back(must({0, 1, 4, 2, 3, 5}, {1, 1, 1, 1, 1, 1}));  // tuUvTV
  reps.push_back(must({0, 2, 3, 1, 5, 4}, {1, 1, 1, 1, 1, 1}));  // tvTuVU
  reps.push_back(must({0, 2, 3, 1, 4, 5}, {1, 1, 1, 1, 1, 1}));  // tvTuUV
  reps.push_back(must({0, 2, 4, 1, 3, 5}, {1, 1, 1, 1, 1, 1}));  // tvUuTV
  reps.push_back(must({1, 2, 3, 0, 5, 4}, {1, 1, 1, 1, 1, 1}));  // uvTtVU
  reps.push_back(must({1, 2, 3, 0, 4, 5}, {1, 1, 1, 1, 1, 1}));  // uvTtUV
  reps.push_back(must({1, 2, 4, 0, 3, 5}, {1, 1, 1, 1, 1, 1}));  // uvUtTV
  return reps;
}

std::vector<std::string> scissors_labels15() {
  return {"tuvTUV", "tuvTVU", "tuvUTV", "tuvUVT", "tuvVTU", "tuvVUT",
          "tuTvVU", "tuTvUV", "tuUvTV", "tvTuVU", "tvTuUV", "tvUuTV",
          "uvTtVU", "uvTtUV", "uvUtTV"};
}

std::vector<MonomialMap> scissors_reps30() {
  auto reps = scissors_reps15();
  MonomialMap m = mirror_map();
  size_t n = reps.size();
  for (size_t i = 0; i < n; ++i) reps.push_back(m.compose(reps[i]));
  return reps;
}

std::vector<std::string> scissors_labels30() {
  auto l = scissors_labels15();
  auto out = l;
  for (auto& s : l) out.push_back(s + "*");
  return out;
}

std::vector<MonomialMap> formula_reps10() {
  std::vector<MonomialMap> reps;
  reps.push_back(MonomialMap::identity());                        // tuvTUV
  reps.push_back(must({3, 1, 2, 0, 4, 5}, {1, 1, 1, 1, 1, 1}));  // TuvtUV
  reps.push_back(must({0, 4, 2, 3, 1, 5}, {1, 1, 1, 1, 1, 1}));  // tUvTuV
  reps.push_back(must({0, 1, 5, 3, 4, 2}, {1, 1, 1, 1, 1, 1}));  // tuVTUv
  reps.push_back(must({0, 2, 5, 3, 1, 4}, {1, 1, 1, 1, 1, 1}));  // tvVTuU
  reps.push_back(must({0, 3, 5, 1, 4, 2}, {1, 1, 1, 1, 1, 1}));  // tTVuUv
  reps.push_back(must({0, 3, 1, 4, 2, 5}, {1, 1, 1, 1, 1, 1}));  // tTuUvV
  reps.push_back(must({0, 3, 4, 1, 2, 5}, {1, 1, 1, 1, 1, 1}));  // tTUuvV
  reps.push_back(must({0, 1, 4, 3, 2, 5}, {1, 1, 1, 1, 1, 1}));  // tuUTvV
  reps.push_back(must({0, 3, 2, 1, 4, 5}, {1, 1, 1, 1, 1, 1}));  // tTvuUV
  return reps;
}

const std::vector<MonomialVec>& genericity_monomials() {
  static const std::vector<MonomialVec> mono = [] {
    const auto& table = full_group();
    std::vector<MonomialVec> out;
    auto collect = [&](const MonomialVec& seed) {
      std::vector<MonomialVec> keys;
      for (const auto& g : table.elements())
        keys.push_back(monomial_canonical(monomial_pullback(g, seed)));
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (auto& k : keys) out.push_back(k);
    };
    collect(MonomialVec{0, 0, 0, 0, 0, 0, 1});  // r
    collect(MonomialVec{1, 0, 0, 1, 0, 0, 0});  // tT
    return out;
  }();
  return mono;
}

GenericityReport genericity(const Balanced& b, double tol) {
  GenericityReport rep;
  rep.generic = true;
  for (const auto& w : genericity_monomials()) {
    double dist = std::abs(monomial_eval(w, b) - 1.0);
    if (dist < tol) {
      rep.generic = false;
      rep.violations.push_back({monomial_spelling(w), dist});
    }
  }
  return rep;
}

void require_generic(const Balanced& b, const char* where, double tol) {
  auto rep = genericity(b, tol);
  if (rep.generic) return;
  std::ostringstream os;
  os << where << ": non-generic";
  bool ideal_vertex = false;
  for (const auto& v : rep.violations)
    if (v.monomial.find('r') != std::string::npos) ideal_vertex = true;
  if (ideal_vertex) os << " (ideal vertices)";
  os << ":";
  for (const auto& v : rep.violations) os << " " << v.monomial;
  throw non_generic_error(os.str(), os.str());
}

}  // namespace hyptet
