#include "tetra.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "formulas.hpp"
#include "klein.hpp"
#include "murakami.hpp"

namespace hyptet {

TetClass classify(const DihedralAngles& a, double tol) {
  Circulants c = circulants_from_angles(a);
  TetClass out{};
  MYData d = my_data_raw(c);
  out.delta = d.delta;
  out.euclidean = std::abs(d.delta) <= kEuclideanTol;
  out.hyperbolic = !out.euclidean && d.delta > 0.0;
  out.finite = out.hyperbolic && is_finite(a);
  auto rep = genericity(b_from_c(c), tol);
  out.generic = rep.generic;
  out.violations = std::move(rep.violations);
  return out;
}

double volume(const DihedralAngles& a, VolumeMethod m, int coset_index) {
  Circulants c = circulants_from_angles(a);
  switch (m) {
    case VolumeMethod::murakami_yano:
      return volume_my(c);
    case VolumeMethod::hnice:
      return volume_hnice(c);
    case VolumeMethod::nicev:
      return volume_nicev(c);
    case VolumeMethod::coset: {
      auto reps = formula_reps10();
      if (coset_index < 0 || size_t(coset_index) >= reps.size())
        throw error(status::invalid_argument, "volume: coset index out of range");
      return coset_volume(b_from_c(c), reps[size_t(coset_index)]);
    }
    case VolumeMethod::klein:
      return numeric_volume(realize(a));
  }
  throw error(status::invalid_argument, "volume: unknown method");
}

namespace {

bool image_is_finite(const Balanced& bb) {
  Circulants lc = lift_c_from_b(bb);
  return is_finite(lc);
}

}  // namespace

std::vector<OrbitRow> orbit_rows(const DihedralAngles& a, int system) {
  Circulants c = circulants_from_angles(a);
  Balanced b = b_from_c(c);
  require_generic(b, "orbit");

  std::vector<MonomialMap> reps;
  std::vector<std::string> labels;
  if (system == 30) {
    reps = scissors_reps30();
    labels = scissors_labels30();
  } else if (system == 15) {
    reps = scissors_reps15();
    labels = scissors_labels15();
  } else if (system == 10) {
    reps = formula_reps10();
    for (size_t i = 0; i < reps.size(); ++i) labels.push_back("F" + std::to_string(i));
  } else {
    throw error(status::invalid_argument, "orbit: system must be 30, 15, or 10");
  }

  std::vector<OrbitRow> rows;
  for (size_t i = 0; i < reps.size(); ++i) {
    OrbitRow row;
    row.label = labels[i];
    row.image = reps[i].apply(b);
    row.finite = image_is_finite(row.image);
    row.magic = magic_clinant(row.image);
    if (system == 10) {
      try {
        row.volume = coset_volume(b, reps[i]);
      } catch (const needs_log_correction_error&) {
        row.volume = std::numeric_limits<double>::quiet_NaN();
      }
    } else {
      // scissors congruence: the image class has the same volume, computed
      // from the image's own MY data
      Circulants lc = lift_c_from_b(row.image);
      row.volume = 0.25 * (my_list(lc).volume() + my_list(conj(lc)).volume());
    }
    rows.push_back(row);
  }
  return rows;
}

DihedralAngles angles_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(status::invalid_argument, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("dihedral_angles") || !j["dihedral_angles"].is_array() ||
      j["dihedral_angles"].size() != 6)
    throw error(status::invalid_argument,
                "JSON needs a 6-element \"dihedral_angles\" array");
  std::array<double, 6> th{};
  for (int i = 0; i < 6; ++i) {
    if (!j["dihedral_angles"][size_t(i)].is_number())
      throw error(status::invalid_argument, "dihedral_angles entries must be numbers");
    th[size_t(i)] = j["dihedral_angles"][size_t(i)].get<double>();
  }
  std::string unit = j.value("unit", "radians");
  if (unit == "degrees") {
    for (auto& x : th) x *= M_PI / 180.0;
  } else if (unit != "radians") {
    throw error(status::invalid_argument, "unit must be \"radians\" or \"degrees\"");
  }
  return DihedralAngles(th);
}

std::string angles_to_json(const DihedralAngles& a) {
  nlohmann::json j;
  j["dihedral_angles"] = a.th;
  j["unit"] = "radians";
  return j.dump();
}

}  // namespace hyptet
