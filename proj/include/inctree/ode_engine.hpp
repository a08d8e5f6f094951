#ifndef INCTREE_ODE_ENGINE_HPP
#define INCTREE_ODE_ENGINE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "inctree/degree_weights.hpp"
#include "inctree/exact.hpp"
#include "inctree/series.hpp"

namespace inctree {

enum class SchemeKind { k_labelled, free_multilabelled, unilabelled_bilabelled, k_tuple };

/// How labels are distributed over the nodes of a weighted ordered tree.
struct LabellingScheme {
  SchemeKind kind = SchemeKind::k_labelled;
  unsigned k = 2;  // used by k_labelled and k_tuple

  static LabellingScheme k_labelled(unsigned k) { return {SchemeKind::k_labelled, k}; }
  static LabellingScheme free_multilabelled() { return {SchemeKind::free_multilabelled, 1}; }
  static LabellingScheme unilabelled_bilabelled() { return {SchemeKind::unilabelled_bilabelled, 1}; }
  static LabellingScheme k_tuple(unsigned k) { return {SchemeKind::k_tuple, k}; }

  std::string to_string() const;
  friend bool operator==(const LabellingScheme&, const LabellingScheme&) = default;
};

/// Total weights T_1, T_2, ... of a multilabelled family, 1-based.
class CountingSequence {
 public:
  CountingSequence(std::vector<Rational> values, LabellingScheme scheme, DegreeWeights weights);

  std::size_t size() const { return values_.size(); }
  /// T_n for 1 <= n <= size(); throws std::out_of_range beyond the horizon.
  const Rational& at(std::size_t n) const;
  const std::vector<Rational>& values() const { return values_; }
  const LabellingScheme& scheme() const { return scheme_; }
  const DegreeWeights& weights() const { return weights_; }

  bool all_integral() const;
  /// The values as integers; throws std::domain_error if one is not integral.
  std::vector<Integer> integers() const;

  /// The exponential generating function in z: sum T_n z^{kn}/(kn)! for the
  /// k-labelled scheme, sum T_m z^m/m! for the free and uni-bi schemes,
  /// sum T_n z^n/(n!)^k for k-tuples. Valid up to the last known term.
  RationalSeries generating_function() const;

 private:
  std::vector<Rational> values_;
  LabellingScheme scheme_;
  DegreeWeights weights_;
};

/// T^{(k)} = phi(T) with T^{(l)}(0) = 0 for l < k; T(z) = sum T_n z^{kn}/(kn)!.
CountingSequence solve_k_labelled(const DegreeWeights& w, unsigned k, std::size_t terms);

/// T' = phi(T) + T, T(0) = 0; T(z) = sum T_m z^m/m!.
CountingSequence solve_free_multilabelled(const DegreeWeights& w, std::size_t terms);

/// T'' = phi(T) + T' phi'(T), T(0) = 0, T'(0) = phi_0.
CountingSequence solve_unilabelled_bilabelled(const DegreeWeights& w, std::size_t terms);

/// T_n = sum_r phi_r sum_{s_1+..+s_r=n-1} multinomial(n-1; s)^k prod T_{s_i}, T_1 = phi_0.
CountingSequence solve_k_tuple(const DegreeWeights& w, unsigned k, std::size_t terms);

/// Dispatches on the scheme.
CountingSequence solve(const LabellingScheme& scheme, const DegreeWeights& w, std::size_t terms);

struct InvariantReport {
  RationalSeries lhs;               // (T')^2
  RationalSeries rhs;               // 2 Phi(T)
  std::vector<bool> coefficient_ok; // per coefficient 0..order
  bool holds() const;
};

/// Checks (T')^2 = 2 Phi(T) coefficientwise for a bilabelled solution series t
/// (a series in z, not in z^2).
InvariantReport first_order_invariant_check(const DegreeWeights& w, const RationalSeries& t);

}  // namespace inctree

#endif  // INCTREE_ODE_ENGINE_HPP
