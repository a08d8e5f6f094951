#ifndef INCTREE_DEGREE_WEIGHTS_HPP
#define INCTREE_DEGREE_WEIGHTS_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inctree/exact.hpp"
#include "inctree/series.hpp"

namespace inctree {

enum class WeightKind {
  polynomial,       // finite list c_0, c_1, ..., c_d
  bundled,          // 1/(1-t)^d, phi_j = C(j+d-1, j)
  exponential,      // e^t
  cosh,             // cosh t
  exp_minus_t,      // e^t - t
  ordered_minus_t,  // 1/(1-t) - t
  custom,           // user function j -> phi_j
};

/// Degree-weight sequence (phi_j)_{j>=0} of a simply generated tree family.
///
/// phi_0 > 0 is checked at construction; finite kinds (polynomial) are also
/// checked for non-negativity. Custom sequences are only checked at j = 0.
/// Values are immutable and cheap to copy.
class DegreeWeights {
 public:
  using Generator = std::function<Rational(std::size_t)>;

  static DegreeWeights polynomial(std::vector<Rational> coefficients, std::string name = {});
  static DegreeWeights bundled(unsigned d);
  static DegreeWeights exponential();
  static DegreeWeights cosh();
  static DegreeWeights exp_minus_t();
  static DegreeWeights ordered_minus_t();
  static DegreeWeights custom(Generator phi, std::string name);

  /// Text grammar:
  ///   exp | cosh | exp-t | ordered-t | ordered | bundled:<d> | poly:<c0>,<c1>,...
  /// where each c_i is an integer or p/q. Throws std::invalid_argument.
  static DegreeWeights parse(std::string_view text);

  WeightKind kind() const;
  const std::string& name() const;

  /// phi_j, exact.
  Rational coefficient(std::size_t j) const;
  Rational operator[](std::size_t j) const { return coefficient(j); }

  /// Largest j with phi_j possibly nonzero, when finite.
  std::optional<std::size_t> degree() const;

 private:
  struct Impl;
  explicit DegreeWeights(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// phi(t) truncated to the given order.
RationalSeries as_series(const DegreeWeights& w, int order);
/// phi'(t) to the given order.
RationalSeries derivative_series(const DegreeWeights& w, int order);
/// Phi(x) = int_0^x phi(t) dt to the given order; Phi(0) = 0.
RationalSeries antiderivative_series(const DegreeWeights& w, int order);

/// phi(t) + t, the weights of the unilabelled family equinumerous with the free
/// multilabelled family of phi.
DegreeWeights plus_identity(const DegreeWeights& w);

}  // namespace inctree

#endif  // INCTREE_DEGREE_WEIGHTS_HPP
