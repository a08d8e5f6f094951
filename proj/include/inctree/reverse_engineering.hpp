#ifndef INCTREE_REVERSE_ENGINEERING_HPP
#define INCTREE_REVERSE_ENGINEERING_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inctree/degree_weights.hpp"
#include "inctree/exact.hpp"

namespace inctree {

struct ReverseReport {
  std::string provenance;             // where the input came from
  std::vector<Rational> input;        // T_1..T_terms
  std::vector<Rational> phi;          // phi_0..phi_{terms-1}
  std::size_t guaranteed_order = 0;   // index of the last trustworthy phi_j
  bool admissible = false;            // phi_0 > 0 and every computed phi_j >= 0
  std::optional<std::size_t> first_violation;
  /// Re-solving T'' = phi(T) with the computed phi reproduces the input.
  /// Unset when phi_0 <= 0 (no weight sequence to solve with).
  std::optional<bool> round_trip;

  std::string to_text() const;
  std::string to_json() const;
};

/// From target bilabelled counts T_1..T_terms: f(w) = sum T_n w^n/(2n)!,
/// g = f^{-1}, phi = 4 g f''(g) + 2 f'(g). Throws std::domain_error if T_1 = 0
/// and std::invalid_argument if fewer than `terms` values are given.
ReverseReport reverse_engineer(std::span<const Rational> tn, std::size_t terms, std::string provenance = "values");

/// Runs the procedure on a registered bilabelled family.
ReverseReport reverse_engineer_family(std::string_view family_id, std::size_t terms);

/// Degree weights with the given leading coefficients and zeros beyond.
DegreeWeights weights_from_prefix(const std::vector<Rational>& phi, std::string name);

struct ParametricFamily {
  Rational a, b, c;
  std::string case_label;               // "case (i)" or "case (ii)"
  bool integrality_holds = true;        // -1/B in N for case (i)
  std::vector<Rational> tn;             // (2n)! (-C)(-A)^n C(B, n)
  std::vector<Rational> closed_form_phi;
  ReverseReport report;                 // generic pipeline on tn
  bool forms_agree = false;
};

/// T(z) = C (1 - (1 - A z^2)^B). Case (i): A > 0, B < 0, C < 0; case (ii):
/// A > 0, 0 < B < 1, C > 0. Anything else throws std::invalid_argument.
ParametricFamily family_from_parameters(const Rational& a, const Rational& b, const Rational& c, std::size_t terms);

}  // namespace inctree

#endif  // INCTREE_REVERSE_ENGINEERING_HPP
