#ifndef INCTREE_SERIES_HPP
#define INCTREE_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "inctree/exact.hpp"

namespace inctree {

/// Truncated formal power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).
///
/// The truncation order N is the largest index whose coefficient is known
/// exactly; coefficients beyond it are never exposed. A default-constructed
/// series has order -1 and carries no information. Series are immutable
/// values: every free function below returns a fresh series together with the
/// order up to which its coefficients are guaranteed.
template <class Scalar>
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {}
  Series(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) {}

  static Series zero(int order) { return Series(std::vector<Scalar>(checked_size(order), Scalar(0))); }
  static Series constant(const Scalar& c, int order) {
    auto s = zero(order);
    if (order >= 0) s.coeffs_[0] = c;
    return s;
  }
  /// The series z.
  static Series identity(int order) {
    auto s = zero(order);
    if (order >= 1) s.coeffs_[1] = Scalar(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Scalar& operator[](std::size_t i) const {
    if (i >= coeffs_.size()) {
      throw std::out_of_range("coefficient " + std::to_string(i) + " beyond truncation order " +
                              std::to_string(order()));
    }
    return coeffs_[i];
  }

  std::span<const Scalar> coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient, order()+1 when all known
  /// coefficients vanish.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return static_cast<int>(i);
    }
    return order() + 1;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  static std::size_t checked_size(int order) {
    if (order < -1) throw std::invalid_argument("truncation order below -1");
    return static_cast<std::size_t>(order + 1);
  }

  std::vector<Scalar> coeffs_;
};

using RationalSeries = Series<Rational>;

/// Keeps coefficients 0..order (order may not exceed the input's).
template <class Scalar>
Series<Scalar> truncate(const Series<Scalar>& a, int order) {
  if (order > a.order()) throw std::invalid_argument("cannot truncate above the known order");
  auto c = a.coefficients();
  return Series<Scalar>(std::vector<Scalar>(c.begin(), c.begin() + (order + 1)));
}

template <class Scalar>
Series<Scalar> operator+(const Series<Scalar>& a, const Series<Scalar>& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return Series<Scalar>(std::move(c));
}

template <class Scalar>
Series<Scalar> operator-(const Series<Scalar>& a) {
  std::vector<Scalar> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x = -x;
  return Series<Scalar>(std::move(c));
}

template <class Scalar>
Series<Scalar> operator-(const Series<Scalar>& a, const Series<Scalar>& b) {
  return a + (-b);
}

template <class Scalar>
Series<Scalar> operator*(const Scalar& k, const Series<Scalar>& a) {
  std::vector<Scalar> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x *= k;
  return Series<Scalar>(std::move(c));
}

/// Cauchy product truncated to min(N_a, N_b).
template <class Scalar>
Series<Scalar> operator*(const Series<Scalar>& a, const Series<Scalar>& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1), Scalar(0));
  auto ac = a.coefficients();
  auto bc = b.coefficients();
  for (int i = 0; i <= n; ++i) {
    if (ac[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += ac[i] * bc[j];
  }
  return Series<Scalar>(std::move(c));
}

/// Multiplication by z^k; the order grows by k.
template <class Scalar>
Series<Scalar> shift(const Series<Scalar>& a, int k) {
  if (k < 0) throw std::invalid_argument("negative shift");
  std::vector<Scalar> c(static_cast<std::size_t>(k), Scalar(0));
  c.insert(c.end(), a.coefficients().begin(), a.coefficients().end());
  return Series<Scalar>(std::move(c));
}

/// Division by z^k, requires the first k coefficients to vanish.
template <class Scalar>
Series<Scalar> unshift(const Series<Scalar>& a, int k) {
  if (k < 0 || a.valuation() < k) throw std::domain_error("series not divisible by z^k");
  auto c = a.coefficients();
  return Series<Scalar>(std::vector<Scalar>(c.begin() + k, c.end()));
}

/// Termwise derivative; order N-1.
template <class Scalar>
Series<Scalar> differentiate(const Series<Scalar>& a) {
  if (a.order() < 1) return Series<Scalar>::zero(a.order() < 0 ? -1 : a.order() - 1);
  std::vector<Scalar> c(static_cast<std::size_t>(a.order()));
  for (int i = 1; i <= a.order(); ++i) c[i - 1] = a[i] * Scalar(i);
  return Series<Scalar>(std::move(c));
}

/// Antiderivative with zero constant term; order N+1.
template <class Scalar>
Series<Scalar> integrate(const Series<Scalar>& a) {
  std::vector<Scalar> c(static_cast<std::size_t>(a.order() + 2), Scalar(0));
  for (int i = 0; i <= a.order(); ++i) c[i + 1] = a[i] / Scalar(i + 1);
  return Series<Scalar>(std::move(c));
}

/// outer(inner(z)) for inner with zero constant term.
///
/// With v the valuation of inner, the unknown tail of outer starts
/// contributing at z^{v(N_outer+1)}, so the result is valid to
/// min(N_inner, v(N_outer+1)-1).
template <class Scalar>
Series<Scalar> compose(const Series<Scalar>& outer, const Series<Scalar>& inner) {
  if (inner.order() < 0) throw std::invalid_argument("inner series carries no coefficients");
  if (inner[0] != 0) throw std::domain_error("compose: inner series has nonzero constant term");
  if (outer.order() < 0) return Series<Scalar>();
  const int v = inner.valuation();
  int n = inner.order();
  if (v <= inner.order()) n = std::min(n, v * (outer.order() + 1) - 1);
  const auto in = truncate(inner, n);
  // Horner, skipping outer terms that cannot reach order n.
  int top = outer.order();
  if (v <= inner.order()) top = std::min(top, n / v);
  auto acc = Series<Scalar>::constant(outer[top], n);
  for (int i = top - 1; i >= 0; --i) acc = acc * in + Series<Scalar>::constant(outer[i], n);
  return acc;
}

/// Multiplicative inverse; requires a nonzero constant term.
template <class Scalar>
Series<Scalar> reciprocal(const Series<Scalar>& a) {
  if (a.order() < 0 || a[0] == 0) throw std::domain_error("reciprocal: constant term is zero");
  const int n = a.order();
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1), Scalar(0));
  const Scalar inv0 = Scalar(1) / a[0];
  c[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Scalar s = 0;
    for (int i = 1; i <= k; ++i) s += a[i] * c[k - i];
    c[k] = -s * inv0;
  }
  return Series<Scalar>(std::move(c));
}

/// Formal square root with positive constant term; the constant term must be
/// the square of a nonzero scalar.
template <class Scalar>
Series<Scalar> sqrt(const Series<Scalar>& a) {
  if (a.order() < 0) throw std::invalid_argument("sqrt of an empty series");
  auto root0 = exact_sqrt(a[0]);
  if (!root0 || *root0 == 0) {
    throw std::domain_error("sqrt: constant term is not the square of a nonzero rational");
  }
  const int n = a.order();
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1), Scalar(0));
  c[0] = *root0;
  const Scalar twice = Scalar(2) * c[0];
  for (int k = 1; k <= n; ++k) {
    Scalar s = a[k];
    for (int i = 1; i < k; ++i) s -= c[i] * c[k - i];
    c[k] = s / twice;
  }
  return Series<Scalar>(std::move(c));
}

/// Integer power by repeated multiplication.
template <class Scalar>
Series<Scalar> pow(const Series<Scalar>& a, std::size_t e) {
  auto r = Series<Scalar>::constant(Scalar(1), a.order());
  for (std::size_t i = 0; i < e; ++i) r = r * a;
  return r;
}

/// Compositional inverse g with a(g(z)) = z, computed by Lagrange inversion:
/// [z^n] g = (1/n) [w^{n-1}] (w / a(w))^n. Order N.
template <class Scalar>
Series<Scalar> reversion(const Series<Scalar>& a) {
  if (a.order() < 1) throw std::invalid_argument("reversion needs at least the linear coefficient");
  if (a[0] != 0) throw std::domain_error("reversion: nonzero constant term");
  if (a[1] == 0) throw std::domain_error("reversion: zero linear coefficient");
  const int n = a.order();
  // h = w / a(w), known to order n-1.
  const auto h = reciprocal(unshift(a, 1));
  std::vector<Scalar> g(static_cast<std::size_t>(n + 1), Scalar(0));
  auto power = h;
  for (int k = 1; k <= n; ++k) {
    g[k] = power[k - 1] / Scalar(k);
    if (k < n) power = power * h;
  }
  return Series<Scalar>(std::move(g));
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const Series<Scalar>& s) {
  bool first = true;
  for (int i = 0; i <= s.order(); ++i) {
    if (s[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << s[i];
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  if (first) os << "0";
  return os << " + O(z^" << (s.order() + 1) << ")";
}

}  // namespace inctree

#endif  // INCTREE_SERIES_HPP
