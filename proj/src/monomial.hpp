#pragma once

// The order-23040 group of scissors-class-preserving transformations as
// monomial maps on balanced coordinates (t,u,v,T,U,V;r).
//
// Every element is a 7x7 integer exponent matrix acting by
// out_i = prod_j in_j^(M_ij); exponent -1 is conjugation on the unit torus.
// The first 6 rows always form a signed permutation with an even number of
// -1 entries, the r row is the unique monomial square root forced by the
// balanced constraint, so integer matrix equality is exact group equality.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coords.hpp"

namespace hyptet {

inline constexpr double kGenericityTol = 1e-8;

struct MonomialMap {
  std::array<int8_t, 49> m{};  // row-major 7x7

  int at(int i, int j) const { return m[size_t(i * 7 + j)]; }
  void set(int i, int j, int v) { m[size_t(i * 7 + j)] = int8_t(v); }

  static MonomialMap identity();
  MonomialMap compose(const MonomialMap& rhs) const;  // this after rhs
  MonomialMap inverse() const;
  Balanced apply(const Balanced& b) const;

  bool operator==(const MonomialMap& o) const { return m == o.m; }
  bool operator<(const MonomialMap& o) const { return m < o.m; }

  // Checks signed-permutation block, even conjugation count, and that the
  // r row matches the square root forced by the constraint.
  bool valid() const;

  // Action on d-angle data lifted through b = b(c); printable form.
  std::string describe() const;  // e.g. "[T,u,v,t,U,V; Tt~r]"
};

// Exponent vectors of monomials in (t,u,v,T,U,V,r), modulo the relation
// r^2 = tuv/(TUV).
using MonomialVec = std::array<int, 7>;
MonomialVec monomial_pullback(const MonomialMap& g, const MonomialVec& w);
MonomialVec monomial_canonical(const MonomialVec& w);  // up to inversion
cplx monomial_eval(const MonomialVec& w, const Balanced& b);
std::string monomial_spelling(const MonomialVec& w);

// Completes a signed permutation of the first six coordinates to a full
// element (the r row is forced).  perm[i] = source index of slot i,
// sign[i] = +-1 exponent.  Returns nullopt if the square root is not a
// monomial (the signed permutation is not in the group).
std::optional<MonomialMap> from_signed_perm(const std::array<int, 6>& perm,
                                            const std::array<int, 6>& sign);

// The 12 generators: 6 shaded (swap / conjugate-swap within each pair),
// 6 unshaded (swap / conjugate-swap across pairs).
const std::array<MonomialMap, 12>& generators();

// Distinguished elements.
MonomialMap g_o();        // s2 P^u_{34} s1; takes the hat off rho
MonomialMap regge_gr();   // the classical Regge transformation
MonomialMap mirror_map(); // odd pair permutation (swap pairs t<->u), the
                          // orientation-reversing relabeling

class GroupTable {
public:
  static GroupTable closure(const std::vector<MonomialMap>& gens);

  size_t order() const { return elems_.size(); }
  const std::vector<MonomialMap>& elements() const { return elems_; }
  bool contains(const MonomialMap& g) const;
  void write_csv(std::ostream& os) const;

private:
  std::vector<MonomialMap> elems_;  // sorted, canonical order
  std::unordered_map<std::string, size_t> index_;
};

// The full group and the named subgroups (cached after first use).
const GroupTable& full_group();      // order 23040
const GroupTable& shaded_group();    // order 64
const GroupTable& regge_group();     // order 144
const GroupTable& p_group();         // order 768, flips + rotations
const GroupTable& q_group();         // order 1536, flips + all relabelings
const GroupTable& h0_group();        // order 1152
const GroupTable& h_group();         // order 2304, magic-clinant stabilizer

std::vector<std::string> subgroup_names();
const GroupTable& subgroup(const std::string& name);

// Coset representatives.
std::vector<MonomialMap> scissors_reps15();  // id + 5 SR + 9 SN
std::vector<MonomialMap> scissors_reps30();  // the 15 and their mirrors
std::vector<MonomialMap> formula_reps10();
std::vector<std::string> scissors_labels15();
std::vector<std::string> scissors_labels30();

// Genericity: the orbits of r (16 constraints) and tT (30 constraints),
// canonicalized up to inversion.
const std::vector<MonomialVec>& genericity_monomials();

struct GenericityViolation {
  std::string monomial;
  double distance;  // |value - 1|
};
struct GenericityReport {
  bool generic;
  std::vector<GenericityViolation> violations;
};
GenericityReport genericity(const Balanced& b, double tol = kGenericityTol);
void require_generic(const Balanced& b, const char* where,
                     double tol = kGenericityTol);

}  // namespace hyptet
