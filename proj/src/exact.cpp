#include "inctree/exact.hpp"

#include <stdexcept>

namespace inctree {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed number: " + std::string(s));
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed number: " + std::string(s));
    }
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(strip(text.substr(0, slash))), parse_int(strip(text.substr(slash + 1))));
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

bool is_integral(const Rational& x) { return x.get_den() == 1; }

Integer to_integer(const Rational& x) {
  if (!is_integral(x)) throw std::domain_error("value is not an integer: " + x.get_str());
  return x.get_num();
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return make_rational(sqrt(n), sqrt(d));
}

Integer factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational binomial(const Rational& a, std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= a - Rational(static_cast<unsigned long>(i));
    r /= Rational(static_cast<unsigned long>(i + 1));
  }
  return r;
}

Integer multinomial(const std::vector<std::size_t>& parts) {
  std::size_t total = 0;
  Integer r = 1;
  for (auto p : parts) {
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

Integer falling_factorial(const Integer& x, std::size_t s) {
  Integer r = 1;
  for (std::size_t i = 0; i < s; ++i) r *= x - static_cast<unsigned long>(i);
  return r;
}

Integer odd_double_factorial(std::size_t n) {
  Integer r = 1;
  for (std::size_t i = 1; i <= n; ++i) r *= static_cast<unsigned long>(2 * i - 1);
  return r;
}

Integer pow(const Integer& base, std::size_t e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& base, std::size_t e) {
  return make_rational(pow(base.get_num(), e), pow(base.get_den(), e));
}

}  // namespace inctree
