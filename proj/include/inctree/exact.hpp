#ifndef INCTREE_EXACT_HPP
#define INCTREE_EXACT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace inctree {

/// Arbitrary-precision integer.
using Integer = mpz_class;
/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// Rational from numerator/denominator, canonicalized.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

bool is_integral(const Rational& x);

/// Converts an integral rational, throws std::domain_error otherwise.
Integer to_integer(const Rational& x);

/// Exact square root of a rational square, nullopt otherwise. Returns the
/// non-negative root.
std::optional<Rational> exact_sqrt(const Rational& x);

Integer factorial(std::size_t n);

/// Binomial coefficient C(n, k) over the integers, 0 when k > n.
Integer binomial(std::size_t n, std::size_t k);

/// Generalized binomial a(a-1)...(a-k+1)/k! for rational upper argument.
Rational binomial(const Rational& a, std::size_t k);

/// Multinomial (s_1 + ... + s_r)! / (s_1! ... s_r!).
Integer multinomial(const std::vector<std::size_t>& parts);

/// Falling factorial x(x-1)...(x-s+1), equal to 1 for s = 0.
Integer falling_factorial(const Integer& x, std::size_t s);

/// Double factorial of an odd argument 2n-1 written as prod_{i=1}^n (2i-1);
/// odd_double_factorial(0) == 1 covers the (-1)!! convention.
Integer odd_double_factorial(std::size_t n);

Integer pow(const Integer& base, std::size_t e);
Rational pow(const Rational& base, std::size_t e);

}  // namespace inctree

#endif  // INCTREE_EXACT_HPP
