#include "inctree/ode_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace inctree {

std::string LabellingScheme::to_string() const {
  switch (kind) {
    case SchemeKind::k_labelled:
      return "k-labelled(k=" + std::to_string(k) + ")";
    case SchemeKind::free_multilabelled:
      return "free-multilabelled";
    case SchemeKind::unilabelled_bilabelled:
      return "unilabelled-bilabelled";
    case SchemeKind::k_tuple:
      return "k-tuple(k=" + std::to_string(k) + ")";
  }
  return "?";
}

CountingSequence::CountingSequence(std::vector<Rational> values, LabellingScheme scheme, DegreeWeights weights)
    : values_(std::move(values)), scheme_(scheme), weights_(std::move(weights)) {}

const Rational& CountingSequence::at(std::size_t n) const {
  if (n == 0 || n > values_.size()) {
    throw std::out_of_range("index " + std::to_string(n) + " outside computed range 1.." +
                            std::to_string(values_.size()));
  }
  return values_[n - 1];
}

bool CountingSequence::all_integral() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& x) { return is_integral(x); });
}

std::vector<Integer> CountingSequence::integers() const {
  std::vector<Integer> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(to_integer(v));
  return out;
}

RationalSeries CountingSequence::generating_function() const {
  const std::size_t n = values_.size();
  switch (scheme_.kind) {
    case SchemeKind::k_labelled: {
      const std::size_t k = scheme_.k;
      std::vector<Rational> c(k * (n + 1), Rational(0));
      for (std::size_t i = 1; i <= n; ++i) c[k * i] = values_[i - 1] / Rational(factorial(k * i));
      return RationalSeries(std::move(c));
    }
    case SchemeKind::free_multilabelled:
    case SchemeKind::unilabelled_bilabelled: {
      std::vector<Rational> c(n + 1, Rational(0));
      for (std::size_t i = 1; i <= n; ++i) c[i] = values_[i - 1] / Rational(factorial(i));
      return RationalSeries(std::move(c));
    }
    case SchemeKind::k_tuple: {
      std::vector<Rational> c(n + 1, Rational(0));
      for (std::size_t i = 1; i <= n; ++i) c[i] = values_[i - 1] / Rational(pow(factorial(i), scheme_.k));
      return RationalSeries(std::move(c));
    }
  }
  throw std::logic_error("unhandled scheme");
}

namespace {

// [x^j] phi(T(x)) for all j <= order, where t has zero constant term and is
// known to at least `order`. phi is cut at `order` since t^j has valuation >= j.
RationalSeries phi_of(const DegreeWeights& w, const std::vector<Rational>& t, int order) {
  RationalSeries inner(std::vector<Rational>(t.begin(), t.begin() + (order + 1)));
  return compose(as_series(w, order), inner);
}

void require_terms(std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("terms must be >= 1");
}

}  // namespace

CountingSequence solve_k_labelled(const DegreeWeights& w, unsigned k, std::size_t terms) {
  require_terms(terms);
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  // Work in u = z^k: T(u) = sum T_n u^n / (kn)!, and T^{(k)} = phi(T) gives
  // T_n = (k(n-1))! [u^{n-1}] phi(T).
  std::vector<Rational> t(terms + 1, Rational(0));
  std::vector<Rational> values;
  for (std::size_t n = 1; n <= terms; ++n) {
    const int j = static_cast<int>(n - 1);
    const auto p = phi_of(w, t, j);
    Rational tn = p[j] * Rational(factorial(k * (n - 1)));
    t[n] = tn / Rational(factorial(k * n));
    values.push_back(std::move(tn));
  }
  return CountingSequence(std::move(values), LabellingScheme::k_labelled(k), w);
}

CountingSequence solve_free_multilabelled(const DegreeWeights& w, std::size_t terms) {
  require_terms(terms);
  std::vector<Rational> t(terms + 1, Rational(0));
  std::vector<Rational> values;
  for (std::size_t m = 1; m <= terms; ++m) {
    const int j = static_cast<int>(m - 1);
    const auto p = phi_of(w, t, j);
    Rational tm = p[j] * Rational(factorial(m - 1));
    if (m >= 2) tm += values[m - 2];
    t[m] = tm / Rational(factorial(m));
    values.push_back(std::move(tm));
  }
  return CountingSequence(std::move(values), LabellingScheme::free_multilabelled(), w);
}

CountingSequence solve_unilabelled_bilabelled(const DegreeWeights& w, std::size_t terms) {
  require_terms(terms);
  // With P = phi(T): T' = P + int P, so T_m = (m-1)! P_{m-1} + (m-2)! P_{m-2}.
  std::vector<Rational> t(terms + 1, Rational(0));
  std::vector<Rational> values;
  for (std::size_t m = 1; m <= terms; ++m) {
    const int j = static_cast<int>(m - 1);
    const auto p = phi_of(w, t, j);
    Rational tm = p[j] * Rational(factorial(m - 1));
    if (m >= 2) tm += p[j - 1] * Rational(factorial(m - 2));
    t[m] = tm / Rational(factorial(m));
    values.push_back(std::move(tm));
  }
  return CountingSequence(std::move(values), LabellingScheme::unilabelled_bilabelled(), w);
}

CountingSequence solve_k_tuple(const DegreeWeights& w, unsigned k, std::size_t terms) {
  require_terms(terms);
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  // In T(z) = sum T_n z^n/(n!)^k the inner sums of the recurrence are
  // ((n-1)!)^k [z^{n-1}] T(z)^r, so T_n = ((n-1)!)^k [z^{n-1}] phi(T) for n >= 2.
  std::vector<Rational> t(terms + 1, Rational(0));
  std::vector<Rational> values;
  for (std::size_t n = 1; n <= terms; ++n) {
    Rational tn;
    if (n == 1) {
      tn = w.coefficient(0);
    } else {
      const int j = static_cast<int>(n - 1);
      const auto p = phi_of(w, t, j);
      tn = p[j] * Rational(pow(factorial(n - 1), k));
    }
    t[n] = tn / Rational(pow(factorial(n), k));
    values.push_back(std::move(tn));
  }
  return CountingSequence(std::move(values), LabellingScheme::k_tuple(k), w);
}

CountingSequence solve(const LabellingScheme& scheme, const DegreeWeights& w, std::size_t terms) {
  switch (scheme.kind) {
    case SchemeKind::k_labelled:
      return solve_k_labelled(w, scheme.k, terms);
    case SchemeKind::free_multilabelled:
      return solve_free_multilabelled(w, terms);
    case SchemeKind::unilabelled_bilabelled:
      return solve_unilabelled_bilabelled(w, terms);
    case SchemeKind::k_tuple:
      return solve_k_tuple(w, scheme.k, terms);
  }
  throw std::logic_error("unhandled scheme");
}

bool InvariantReport::holds() const {
  return std::all_of(coefficient_ok.begin(), coefficient_ok.end(), [](bool b) { return b; });
}

InvariantReport first_order_invariant_check(const DegreeWeights& w, const RationalSeries& t) {
  if (t.order() < 1) throw std::invalid_argument("invariant check needs a series of order >= 1");
  const auto dt = differentiate(t);
  const auto lhs = dt * dt;
  const auto rhs = Rational(2) * compose(antiderivative_series(w, lhs.order()), t);
  const int n = std::min(lhs.order(), rhs.order());
  InvariantReport report{truncate(lhs, n), truncate(rhs, n), {}};
  for (int i = 0; i <= n; ++i) report.coefficient_ok.push_back(lhs[i] == rhs[i]);
  return report;
}

}  // namespace inctree
