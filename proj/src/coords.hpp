#pragma once

// Coordinate systems on decorated tetrahedra and their octahedral buddies.
//
// Edge lettering (fixed throughout): a={12}, b={13}, c={14}, d={34}, e={24},
// f={23}, so (a,d), (b,e), (c,f) are the opposite-edge pairs.  Circulants
// A..F are e^{i theta}, clinants are their squares.

#include <array>
#include <complex>
#include <cstdint>

#include "polylog.hpp"

namespace hyptet {

struct DihedralAngles {
  std::array<double, 6> th;  // (A,B,C,D,E,F) in radians, stored in [0, 2pi)

  DihedralAngles() : th{} {}
  explicit DihedralAngles(const std::array<double, 6>& a);
  double operator[](int i) const { return th[size_t(i)]; }
};

struct Circulants {
  std::array<cplx, 6> c;  // (A,B,C,D,E,F), unit modulus

  cplx operator[](int i) const { return c[size_t(i)]; }
  cplx& operator[](int i) { return c[size_t(i)]; }
};

// (a,b,c,d,e,f; r1,r2,r3,r4) with r1^2=aef, r2^2=bdf, r3^2=cde, r4^2=abc
// and r1 r2 r3 r4 = abcdef.
struct SuperCoords {
  std::array<cplx, 6> clin;
  std::array<cplx, 4> root;

  // Max constraint residual over s1..s5; zero for constructed values.
  double residual() const;
};

// (t,u,v,T,U,V; r) with r^2 = tuv/(TUV).
struct Balanced {
  std::array<cplx, 7> v;

  cplx operator[](int i) const { return v[size_t(i)]; }
  cplx& operator[](int i) { return v[size_t(i)]; }
  double residual() const;  // |r^2 - tuv/(TUV)|
};

// Deck transformations between the covers c -> b -> s.
//  * K4 negates all circulants except one opposite pair; deck of c -> b.
//  * Neg negates a vertex triple of circulants ({A,B,F}, {A,C,E}, {B,C,D},
//    {D,E,F}); together with K4 these form the 8-element deck of c -> s.
//  * D negates t..V and fixes r; the deck of b -> s.
struct DeckElement {
  enum class Kind : uint8_t { K4, Neg, D };
  Kind kind;
  uint8_t mask;  // bit i set = negate circulant i (K4/Neg only)

  static std::array<DeckElement, 4> k4_elements();   // identity first
  static std::array<DeckElement, 4> neg_elements();  // ABF, ACE, BCD, DEF
  static DeckElement d_element();
};

DihedralAngles angles_from_circulants(const Circulants& c);
Circulants circulants_from_angles(const DihedralAngles& a);

Circulants apply_deck(const DeckElement& g, const Circulants& c);
Balanced apply_deck_balanced(const Balanced& b);  // the D element

SuperCoords s_from_c(const Circulants& c);
Balanced b_from_c(const Circulants& c);
SuperCoords s_from_b(const Balanced& b);

// One of the 4 preimages of b under K4, chosen by principal square roots
// (argument in (-pi/2, pi/2], ties to +) with C,F flipped if needed to
// match r = -ABC.
Circulants lift_c_from_b(const Balanced& b);

Circulants conj(const Circulants& c);
Balanced conj(const Balanced& b);

// Principal square root on the unit circle: argument in (-pi/2, pi/2].
cplx principal_sqrt(cplx z);

}  // namespace hyptet
