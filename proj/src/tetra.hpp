#pragma once

// High-level entry points used by the C API and the CLI: classification,
// volume method dispatch, orbit rows, JSON input.

#include <string>
#include <vector>

#include "coords.hpp"
#include "monomial.hpp"

namespace hyptet {

struct TetClass {
  double delta;
  bool euclidean;    // |delta| <= tol
  bool hyperbolic;   // delta > 0
  bool finite;       // all four vertices finite (only meaningful if hyperbolic)
  bool generic;
  std::vector<GenericityViolation> violations;
};

TetClass classify(const DihedralAngles& a, double tol = kGenericityTol);

enum class VolumeMethod {
  murakami_yano,
  hnice,
  nicev,
  coset,   // needs an index 0..9
  klein,   // numeric oracle
};

double volume(const DihedralAngles& a, VolumeMethod m, int coset_index = 0);

struct OrbitRow {
  std::string label;
  Balanced image;
  bool finite;
  double volume;        // NaN if the row volume is not defined
  cplx magic;           // magic clinant of the image (10-system)
};

// system = 30, 15, or 10.
std::vector<OrbitRow> orbit_rows(const DihedralAngles& a, int system);

// {"dihedral_angles": [6 reals], "unit": "radians"|"degrees"}
DihedralAngles angles_from_json(const std::string& text);
std::string angles_to_json(const DihedralAngles& a);

}  // namespace hyptet
