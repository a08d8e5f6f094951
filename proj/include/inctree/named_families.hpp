#ifndef INCTREE_NAMED_FAMILIES_HPP
#define INCTREE_NAMED_FAMILIES_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "inctree/degree_weights.hpp"
#include "inctree/exact.hpp"
#include "inctree/ode_engine.hpp"

namespace inctree {

// ---- closed forms and special recurrences (bilabelled unless noted) ----

/// c_0 = 1, c_k = sum_{m<k} c_m c_{k-1-m} / ((m+1)(2m+1)); returns c_0..c_{count-1}.
std::vector<Rational> inverse_erf_coefficients(std::size_t count);

/// Ordered family: T_n = (2n-2)! c_{n-1} / 2^{n-1}.
Integer ordered_bilabelled_closed_form(std::size_t n);

/// 3-bundled family: T_n = (2n-3)!! (2n-1)!!.
Integer three_bundled_closed_form(std::size_t n);

/// Partial exponential Bell polynomial B_{k,m}(x_1, ..., x_{k-m+1}).
/// Requires 1 <= m <= k and at least k-m+1 values.
Rational partial_bell(std::size_t k, std::size_t m, const std::vector<Rational>& xs);

/// x_k = k! C(2k,k) / (4^k (2k-1)(2k+1)), the inputs of the 2-bundled Bell form.
Rational two_bundled_bell_input(std::size_t k);

/// 2-bundled family via Lagrange inversion and Bell polynomials:
/// T_n = (2n)!/n 2^{-n} sum_{m=1}^{n-1} C(2n-1+m, m) m!/(n-1)! B_{n-1,m}(x_1, ...);
/// T_1 = 1.
Integer two_bundled_closed_form(std::size_t n);

/// The Bell form with 8^{-n} and x_k = k! k C(2k,k)/(4^k (2k+1)), kept to
/// document that it does not reproduce the sequence (it gives 1/8 at n = 2).
Rational two_bundled_closed_form_uncorrected(std::size_t n);

/// T_n = 2 sum C(2n-2,2k) T_k T_{n-k} - sum_{j+k+l=n-1} C(2n-2; 2j,2k,2l) T_j T_k T_{l+1}, T_0 = 0.
std::vector<Integer> two_bundled_recurrence(std::size_t terms);

/// T_n = sum_{k=1}^{n-2} C(2n-2,2k) T_k T_{n-1-k}.
std::vector<Integer> strict_binary_recurrence(std::size_t terms);
/// T_n = sum_{k=1}^{n-1} C(2n-2,2k) T_k T_{n-k}.
std::vector<Integer> ordered_bilabelled_recurrence(std::size_t terms);
/// T_n = 2 T_{n-1} + sum_{k=1}^{n-2} C(2n-2,2k) T_k T_{n-1-k}.
std::vector<Integer> binary_bilabelled_recurrence(std::size_t terms);
/// T_{n+2} = 1/2 sum_{j+k+l=n-1} C(2n+1; 2j+1,2k+1,2l+1) T_{j+1} T_{k+1} T_{l+1}.
std::vector<Integer> even_degree_recurrence(std::size_t terms);

/// S_1..S_count with sl(z) = sum S_n z^n/n!, from sl'' = -2 sl^3, sl(0)=0, sl'(0)=1.
std::vector<Integer> lemniscate_sine_coefficients(std::size_t count);

struct LemniscateRow {
  std::size_t n;
  Integer t;       // even-degree T_n
  Integer s;       // S_{2n-1}
  bool holds;      // T_n = (-1)^{(n-1)/2} S_{2n-1} / 2^{n-1}, or both zero for even n
};
std::vector<LemniscateRow> even_degree_lemniscate_relation_check(std::size_t max_n);

/// Trilabelled unordered family: T_1 = 1,
/// T_{n+1} = sum_{k=1}^{n} C(3n-1, 3k-3) T_k T_{n+1-k}.
std::vector<Integer> blasius_numbers(std::size_t terms);

/// Q_1..Q_terms with Q_0 = 0, Q_1 = 1, Q_{m+2} = sum_k C(m,k)(Q_k + Q_{k+1}) Q_{m-k+1}.
std::vector<Integer> unibi_q_sequence(std::size_t terms);

struct WeierstrassInvariants {
  Rational g2;
  Rational g3;
  Rational p_at_c;  // required value of the p-function at the shift constant
};
/// Binary/ternary bilabelled families with phi = phi0 + phi1 t + phi2 t^2.
WeierstrassInvariants weierstrass_invariants(const Rational& phi0, const Rational& phi1, const Rational& phi2);

struct LatticeSum {
  long double value;     // real part of the normalised partial sum
  long double residual;  // imaginary part, should vanish
};
/// Strict-binary T_n from the Eisenstein-type lattice sum over |n1|,|n2| <= cutoff.
LatticeSum strict_binary_lattice_sum(std::size_t n, std::size_t cutoff);

/// Strict-binary free multilabelled T_m from the trigonometric closed form,
/// evaluated exactly in Z[sqrt 3]/2.
Integer strict_binary_free_multi_explicit(std::size_t m);

/// Binary free multilabelled T_m = sqrt5 sum_{k=1}^{cutoff} ((7-3 sqrt5)/2)^k (sqrt5 k)^m.
long double binary_free_multi_numeric(std::size_t m, std::size_t cutoff);

struct TangentRow {
  std::size_t n;
  Integer from_tangent;  // (2n-1)! [z^{2n-1}] tan z / 2^{n-1}
  Integer from_solver;   // unordered bilabelled T_n
  bool holds;
};
std::vector<TangentRow> reduced_tangent_check(std::size_t max_n);

// ---- registry ----

struct FamilySpec {
  std::string id;
  std::string description;
  LabellingScheme scheme;
  DegreeWeights weights;
  std::vector<Integer> reference;  // known prefix T_1, T_2, ...
  std::string provenance;          // where the prefix comes from
  std::string oeis;                // empty when unknown
  /// Independent closed form or special recurrence, if any.
  std::function<std::vector<Integer>(std::size_t)> closed_form;
  std::string closed_form_name;

  CountingSequence sequence(std::size_t terms) const { return solve(scheme, weights, terms); }
};

/// Built-in families in a fixed order.
const std::vector<FamilySpec>& builtin_families();

/// Looks up a built-in id or builds a parametric family:
///   <scheme>/<weights>[:k=<k>]  with scheme in {bilabelled, k-labelled, free,
///   unibi, ktuple} and weights in the DegreeWeights grammar.
/// Throws std::invalid_argument for unknown ids.
FamilySpec find_family(std::string_view id);

}  // namespace inctree

#endif  // INCTREE_NAMED_FAMILIES_HPP
