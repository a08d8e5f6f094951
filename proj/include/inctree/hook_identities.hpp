#ifndef INCTREE_HOOK_IDENTITIES_HPP
#define INCTREE_HOOK_IDENTITIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "inctree/degree_weights.hpp"
#include "inctree/exact.hpp"
#include "inctree/ode_engine.hpp"

namespace inctree {

/// Left side (exhaustive tree sum) against right side (ODE solver) of one
/// hook-length identity.
struct HookIdentityReport {
  LabellingScheme scheme;
  std::string family;      // weight name
  std::size_t parameter;   // n, or m for bucket schemes
  Rational lhs;
  Rational rhs;
  bool equal = false;
  std::size_t trees_visited = 0;

  /// One line: "<scheme> <family> n=<n> lhs=<..> rhs=<..> trees=<..> OK|FAIL".
  std::string to_text() const;
  /// JSON object with the same fields.
  std::string to_json() const;
};

/// sum_T prod_v phi_odeg(v) / (k h_v)^{falling k} against T_n/(kn)!.
/// n is bounded by capacity_limit(12).
HookIdentityReport hook_sum_k_labelled(const DegreeWeights& w, unsigned k, std::size_t n);

/// Sum over trees of every size and every bucket function with m labels of
/// prod_v phi_odeg(v) / (h^{[b]}(v))^{falling b(v)}, against T_m/m! of the
/// free multilabelled scheme (max_bucket unset) or the uni-bi scheme
/// (max_bucket = 2). m is bounded by capacity_limit(8).
HookIdentityReport hook_sum_bucket(const DegreeWeights& w, std::size_t m, std::optional<unsigned> max_bucket);

/// sum_T prod_v phi_odeg(v) / h_v^k against T_n/(n!)^k.
HookIdentityReport hook_sum_k_tuple(const DegreeWeights& w, unsigned k, std::size_t n);

enum class TreeFamily { ordered, binary, strict_binary };

/// phi_j = 1, C(2, j), and 1 + t^2 respectively.
DegreeWeights tree_family_weights(TreeFamily family);

/// rho(h) = P(h)/Q(h) with P, Q given by coefficient lists (constant first).
struct HookWeight {
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;

  /// Throws std::domain_error naming h when Q(h) = 0.
  Rational operator()(std::size_t h) const;
};

/// sum_T w(T) prod_v rho(h_v) over trees of size n.
Rational generic_hook_weight_sum(const DegreeWeights& w, const HookWeight& rho, std::size_t n);
Rational generic_hook_weight_sum(TreeFamily family, const HookWeight& rho, std::size_t n);

}  // namespace inctree

#endif  // INCTREE_HOOK_IDENTITIES_HPP
