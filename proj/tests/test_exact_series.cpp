#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "inctree/exact.hpp"
#include "inctree/series.hpp"

using namespace inctree;
using S = RationalSeries;

namespace {
Rational q(long p, long d = 1) { return make_rational(p, d); }
}  // namespace

TEST_CASE("rationals are normalised") {
  const Rational r = q(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(parse_rational("10/4") == q(5, 2));
  CHECK(parse_rational("-7") == q(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(to_integer(q(1, 2)), std::domain_error);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(q(1, 2), 2) == q(-1, 8));
  CHECK(binomial(q(-1), 3) == q(-1));
  CHECK(multinomial({2, 1, 1}) == 12);
  CHECK(falling_factorial(Integer(5), 0) == 1);
  CHECK(falling_factorial(Integer(5), 2) == 20);
  CHECK(odd_double_factorial(0) == 1);
  CHECK(odd_double_factorial(4) == 105);
  CHECK(exact_sqrt(q(9, 4)) == q(3, 2));
  CHECK_FALSE(exact_sqrt(q(2)).has_value());
}

TEST_CASE("add") {
  CHECK(S{1, 1} + S{1, -1} == S{2, 0});
  const S s{q(1, 3), 0, 5};
  CHECK(S::zero(2) + s == s);
  CHECK(S{0, 0, q(1, 2)} + S{0, 0, q(1, 3)} == S{0, 0, q(5, 6)});
  CHECK((S{1, 2, 3} + S{1, 1}).order() == 1);
}

TEST_CASE("mul") {
  CHECK(S{1, 1, 0} * S{1, -1, 0} == S{1, 0, -1});
  const S s{2, q(1, 7), 3};
  CHECK(s * S::constant(1, 2) == s);
  CHECK(S{1, 1, 1, 0} * S{1, -1, 0, 0} == S{1, 0, 0, -1});
  CHECK((S{1, 1, 1} * S{1, 1}).order() == 1);
}

TEST_CASE("differentiate and integrate") {
  CHECK(differentiate(S{0, 0, 0, q(1, 6)}) == S{0, 0, q(1, 2)});
  CHECK(integrate(S{0, 0, 1}) == S{0, 0, 0, q(1, 3)});
  const S z4{0, 0, 0, 0, 1};
  CHECK(integrate(differentiate(z4)) == z4);
  const S any{q(2, 3), -1, 4, q(5, 9)};
  CHECK(differentiate(integrate(any)) == any);
  CHECK(differentiate(any).order() == 2);
  CHECK(integrate(any).order() == 4);
}

TEST_CASE("compose") {
  const S geometric{1, 1, 1, 1, 1, 1};
  CHECK(compose(geometric, S::identity(5)) == geometric);
  const S exp_series{1, 1, q(1, 2), q(1, 6)};
  CHECK(compose(exp_series, S::zero(3)) == S::constant(1, 3));
  // (1 + t^2) o (z^2/2) = 1 + z^4/4
  CHECK(compose(S{1, 0, 1}, S{0, 0, q(1, 2), 0, 0}) == S{1, 0, 0, 0, q(1, 4)});
  CHECK_THROWS_AS(compose(geometric, S{1, 1}), std::domain_error);
}

TEST_CASE("compose order bookkeeping") {
  // outer known to z^2, inner of valuation 2: valid to z^5
  const auto c = compose(S{1, 1, 1}, S{0, 0, 1, 0, 0, 0, 0, 0});
  CHECK(c.order() == 5);
  CHECK(c == S{1, 0, 1, 0, 1, 0});
}

TEST_CASE("reciprocal and sqrt") {
  CHECK(reciprocal(S{1, -1, 0, 0, 0}) == S{1, 1, 1, 1, 1});
  CHECK(sqrt(S::constant(1, 4)) == S::constant(1, 4));
  const S a{1, 0, -1, 0, 0, 0, 0, 0, 0};
  const auto r = sqrt(a);
  CHECK(r[2] == q(-1, 2));
  CHECK(r[4] == q(-1, 8));
  CHECK(r * r == a);  // oracle: squaring
  const S b{q(4, 9), 3, q(-2, 5), 7, 0, 1};
  CHECK(sqrt(b) * sqrt(b) == b);
  CHECK_THROWS_AS(reciprocal(S{0, 1}), std::domain_error);
  CHECK_THROWS_AS(sqrt(S{2, 1}), std::domain_error);
}

TEST_CASE("reversion") {
  CHECK(reversion(S::identity(6)) == S::identity(6));
  // z/(1-z) and z/(1+z)
  CHECK(reversion(S{0, 1, 1, 1, 1, 1, 1}) == S{0, 1, -1, 1, -1, 1, -1});
  const S a{0, 1, -1, 0, 0, 0, 0, 0};
  CHECK(compose(a, reversion(a)) == S::identity(7));
  const S b{0, q(3, 2), q(1, 7), -2, q(5, 3), 0, 1};
  CHECK(compose(b, reversion(b)) == S::identity(6));
  CHECK(compose(reversion(b), b) == S::identity(6));
  CHECK_THROWS_AS(reversion(S{0, 0, 1}), std::domain_error);
}

TEST_CASE("coefficients beyond the order are not exposed") {
  const S s{1, 2};
  CHECK_THROWS_AS(s[2], std::out_of_range);
  CHECK(S().order() == -1);
}

TEST_CASE("coefficients stay in lowest terms") {
  const auto r = reciprocal(S{3, 2, 1, 5, 7});
  for (const auto& c : r.coefficients()) {
    Rational copy = c;
    copy.canonicalize();
    CHECK(copy.get_num() == c.get_num());
    CHECK(copy.get_den() == c.get_den());
    CHECK(c.get_den() > 0);
  }
}
