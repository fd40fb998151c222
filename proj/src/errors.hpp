#pragma once

#include <stdexcept>
#include <string>

namespace hyptet {

// Status codes shared with the C API (include/hyptet/hyptet.h keeps the
// mirrored enum; test_capi checks the two stay in sync).
enum class status : int {
  ok = 0,
  invalid_argument = 1,
  domain = 2,           // non-finite or out-of-domain input
  branch_cut = 3,       // evaluation requested on a branch cut
  degenerate = 4,       // degenerate ideal tetrahedron (clinant at 1, z in {0,1})
  non_hyperbolic = 5,   // delta < 0
  euclidean = 6,        // delta = 0
  non_generic = 7,      // one of the 46 genericity monomials at 1
  not_finite = 8,       // tetrahedron has non-finite vertices
  needs_log_correction = 9,  // z-list outside FT, formula would need log terms
  singular = 10,        // vanishing denominator in a weight
  holonomy = 11,        // z is not a root of the octahedron holonomy quadratic
  realization = 12,     // Gram matrix not realizable as a finite tetrahedron
  no_convergence = 13,  // integrator failed to reach the requested tolerance
  internal = 14,
};

class error : public std::runtime_error {
public:
  error(status s, const std::string& what) : std::runtime_error(what), status_(s) {}
  status code() const { return status_; }

private:
  status status_;
};

struct domain_error : error {
  explicit domain_error(const std::string& w) : error(status::domain, w) {}
};
struct branch_cut_error : error {
  explicit branch_cut_error(const std::string& w) : error(status::branch_cut, w) {}
};
struct degenerate_error : error {
  explicit degenerate_error(const std::string& w) : error(status::degenerate, w) {}
};
struct non_hyperbolic_error : error {
  explicit non_hyperbolic_error(const std::string& w, double delta)
      : error(status::non_hyperbolic, w), delta(delta) {}
  double delta;
};
struct euclidean_error : error {
  explicit euclidean_error(const std::string& w, double delta)
      : error(status::euclidean, w), delta(delta) {}
  double delta;
};
struct non_generic_error : error {
  non_generic_error(const std::string& w, std::string violations)
      : error(status::non_generic, w), violations(std::move(violations)) {}
  std::string violations;  // comma separated monomial spellings
};
struct not_finite_error : error {
  explicit not_finite_error(const std::string& w) : error(status::not_finite, w) {}
};
struct needs_log_correction_error : error {
  explicit needs_log_correction_error(const std::string& w)
      : error(status::needs_log_correction, w) {}
};
struct singular_error : error {
  explicit singular_error(const std::string& w) : error(status::singular, w) {}
};
struct holonomy_error : error {
  explicit holonomy_error(const std::string& w) : error(status::holonomy, w) {}
};
struct realization_error : error {
  explicit realization_error(const std::string& w) : error(status::realization, w) {}
};
struct convergence_error : error {
  explicit convergence_error(const std::string& w) : error(status::no_convergence, w) {}
};

}  // namespace hyptet
