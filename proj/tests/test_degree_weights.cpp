#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "inctree/degree_weights.hpp"

using namespace inctree;

TEST_CASE("coefficients of the built-in kinds") {
  CHECK(DegreeWeights::exponential().coefficient(3) == make_rational(1, 6));
  CHECK(DegreeWeights::bundled(3).coefficient(2) == 6);
  CHECK(DegreeWeights::cosh().coefficient(1) == 0);
  CHECK(DegreeWeights::cosh().coefficient(4) == make_rational(1, 24));
  CHECK(DegreeWeights::exp_minus_t().coefficient(1) == 0);
  CHECK(DegreeWeights::exp_minus_t().coefficient(2) == make_rational(1, 2));
  CHECK(DegreeWeights::ordered_minus_t().coefficient(1) == 0);
  CHECK(DegreeWeights::ordered_minus_t().coefficient(5) == 1);
  const auto p = DegreeWeights::polynomial({1, 0, 1, 0});
  CHECK(p.degree() == 2u);
  CHECK(p.coefficient(7) == 0);
}

TEST_CASE("bundled weights are binomials") {
  for (unsigned d = 1; d <= 4; ++d) {
    const auto w = DegreeWeights::bundled(d);
    for (std::size_t j = 0; j < 10; ++j) CHECK(w.coefficient(j) == binomial(j + d - 1, j));
  }
}

TEST_CASE("antiderivatives") {
  const auto a = antiderivative_series(DegreeWeights::polynomial({1, 0, 1}), 5);
  CHECK(a == RationalSeries{0, 1, 0, make_rational(1, 3), 0, 0});
  const auto e = antiderivative_series(DegreeWeights::exponential(), 4);
  CHECK(e == RationalSeries{0, 1, make_rational(1, 2), make_rational(1, 6), make_rational(1, 24)});
  // x/(1-x)
  CHECK(antiderivative_series(DegreeWeights::bundled(2), 5) == RationalSeries{0, 1, 1, 1, 1, 1});
}

TEST_CASE("derivative series matches differentiate") {
  for (const auto& w : {DegreeWeights::exponential(), DegreeWeights::bundled(3), DegreeWeights::cosh(),
                        DegreeWeights::polynomial({2, 5, 1})}) {
    CHECK(derivative_series(w, 6) == differentiate(as_series(w, 7)));
  }
}

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(DegreeWeights::polynomial({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeWeights::polynomial({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeWeights::bundled(0), std::invalid_argument);
  CHECK_THROWS_AS(DegreeWeights::custom([](std::size_t) { return Rational(0); }, "zero"), std::invalid_argument);
}

TEST_CASE("text grammar") {
  CHECK(DegreeWeights::parse("exp").kind() == WeightKind::exponential);
  CHECK(DegreeWeights::parse("cosh").kind() == WeightKind::cosh);
  CHECK(DegreeWeights::parse("exp-t").kind() == WeightKind::exp_minus_t);
  CHECK(DegreeWeights::parse("ordered-t").kind() == WeightKind::ordered_minus_t);
  CHECK(DegreeWeights::parse("bundled:3").coefficient(2) == 6);
  CHECK(DegreeWeights::parse("poly:1,1/2,3").coefficient(1) == make_rational(1, 2));
  CHECK_THROWS_AS(DegreeWeights::parse("bundled:x"), std::invalid_argument);
  CHECK_THROWS_AS(DegreeWeights::parse("sin"), std::invalid_argument);
}

TEST_CASE("coefficient access is deterministic") {
  const auto w = DegreeWeights::exponential();
  CHECK(w.coefficient(9) == w.coefficient(9));
  const auto copy = w;
  CHECK(copy.coefficient(9) == w[9]);
}

TEST_CASE("plus identity adds t") {
  const auto w = plus_identity(DegreeWeights::exp_minus_t());
  CHECK(w.coefficient(1) == 1);
  CHECK(w.coefficient(3) == make_rational(1, 6));
}
