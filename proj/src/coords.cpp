#include "coords.hpp"

#include <cmath>

#include "errors.hpp"

namespace hyptet {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

double reduce_angle(double x) {
  double t = std::fmod(x, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}
}  // namespace

DihedralAngles::DihedralAngles(const std::array<double, 6>& a) {
  for (int i = 0; i < 6; ++i) {
    if (!std::isfinite(a[size_t(i)]))
      throw domain_error("DihedralAngles: non-finite angle");
    th[size_t(i)] = reduce_angle(a[size_t(i)]);
  }
}

Circulants circulants_from_angles(const DihedralAngles& a) {
  Circulants c;
  for (int i = 0; i < 6; ++i) c[i] = std::polar(1.0, a[i]);
  return c;
}

DihedralAngles angles_from_circulants(const Circulants& c) {
  std::array<double, 6> a;
  for (int i = 0; i < 6; ++i) a[size_t(i)] = std::arg(c[i]);
  return DihedralAngles(a);
}

double SuperCoords::residual() const {
  const auto& s = clin;
  const auto& r = root;
  double m = 0.0;
  m = std::max(m, std::abs(r[0] * r[0] - s[0] * s[4] * s[5]));  // r1^2 = aef
  m = std::max(m, std::abs(r[1] * r[1] - s[1] * s[3] * s[5]));  // r2^2 = bdf
  m = std::max(m, std::abs(r[2] * r[2] - s[2] * s[3] * s[4]));  // r3^2 = cde
  m = std::max(m, std::abs(r[3] * r[3] - s[0] * s[1] * s[2]));  // r4^2 = abc
  m = std::max(m, std::abs(r[0] * r[1] * r[2] * r[3] -
                           s[0] * s[1] * s[2] * s[3] * s[4] * s[5]));
  return m;
}

double Balanced::residual() const {
  return std::abs(v[6] * v[6] - (v[0] * v[1] * v[2]) / (v[3] * v[4] * v[5]));
}

std::array<DeckElement, 4> DeckElement::k4_elements() {
  // negate all but one opposite pair: fix (A,D), (B,E), (C,F)
  return {DeckElement{Kind::K4, 0b000000}, DeckElement{Kind::K4, 0b110110},
          DeckElement{Kind::K4, 0b101101}, DeckElement{Kind::K4, 0b011011}};
}

std::array<DeckElement, 4> DeckElement::neg_elements() {
  // vertex triples: {A,B,F}, {A,C,E}, {B,C,D}, {D,E,F}
  return {DeckElement{Kind::Neg, 0b100011}, DeckElement{Kind::Neg, 0b010101},
          DeckElement{Kind::Neg, 0b001110}, DeckElement{Kind::Neg, 0b111000}};
}

DeckElement DeckElement::d_element() { return DeckElement{Kind::D, 0}; }

Circulants apply_deck(const DeckElement& g, const Circulants& c) {
  if (g.kind == DeckElement::Kind::D)
    throw domain_error("apply_deck: D acts on balanced coordinates");
  Circulants out = c;
  for (int i = 0; i < 6; ++i)
    if (g.mask & (1u << i)) out[i] = -out[i];
  return out;
}

Balanced apply_deck_balanced(const Balanced& b) {
  Balanced out = b;
  for (int i = 0; i < 6; ++i) out[i] = -out[i];
  return out;
}

SuperCoords s_from_c(const Circulants& c) {
  const cplx A = c[0], B = c[1], C = c[2], D = c[3], E = c[4], F = c[5];
  SuperCoords s;
  s.clin = {A * A, B * B, C * C, D * D, E * E, F * F};
  s.root = {-A * E * F, -B * D * F, -C * D * E, -A * B * C};
  return s;
}

Balanced b_from_c(const Circulants& c) {
  const cplx A = c[0], B = c[1], C = c[2], D = c[3], E = c[4], F = c[5];
  Balanced b;
  b.v = {A * D, B * E, C * F, D / A, E / B, F / C, -A * B * C};
  return b;
}

SuperCoords s_from_b(const Balanced& b) {
  const cplx t = b[0], u = b[1], v = b[2], T = b[3], U = b[4], V = b[5],
             r = b[6];
  SuperCoords s;
  s.clin = {t / T, u / U, v / V, t * T, u * U, v * V};
  s.root = {U * V * r, T * V * r, T * U * r, r};
  return s;
}

cplx principal_sqrt(cplx z) {
  cplx w = std::sqrt(z);  // principal: arg in (-pi/2, pi/2]
  if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) w = -w;
  return w;
}

Circulants lift_c_from_b(const Balanced& b) {
  const cplx t = b[0], u = b[1], v = b[2], T = b[3], U = b[4], V = b[5],
             r = b[6];
  Circulants c;
  c[0] = principal_sqrt(t / T);  // A
  c[3] = t / c[0];               // D
  c[1] = principal_sqrt(u / U);  // B
  c[4] = u / c[1];               // E
  c[2] = principal_sqrt(v / V);  // C
  c[5] = v / c[2];               // F
  if (std::abs(-c[0] * c[1] * c[2] - r) > 1.0) {
    c[2] = -c[2];
    c[5] = -c[5];
  }
  return c;
}

Circulants conj(const Circulants& c) {
  Circulants out;
  for (int i = 0; i < 6; ++i) out[i] = std::conj(c[i]);
  return out;
}

Balanced conj(const Balanced& b) {
  Balanced out;
  for (int i = 0; i < 7; ++i) out[i] = std::conj(b[i]);
  return out;
}

}  // namespace hyptet
