#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>

#include "doctest.h"
#include "inctree/ode_engine.hpp"
#include "inctree/tree_space.hpp"

using namespace inctree;

namespace {

std::vector<Rational> r(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Number of increasing labellings of unordered (recursive) trees on n nodes,
// by choosing a parent for each label 2..n among the smaller labels.
long recursive_trees_bruteforce(int n) {
  long count = 0;
  std::vector<int> parent(n + 1, 0);
  std::function<void(int)> go = [&](int v) {
    if (v > n) {
      ++count;
      return;
    }
    for (int p = 1; p < v; ++p) {
      parent[v] = p;
      go(v + 1);
    }
  };
  go(2);
  return count;
}

}  // namespace

TEST_CASE("k-labelled solver") {
  CHECK(solve_k_labelled(DegreeWeights::exponential(), 2, 6).values() == r({1, 1, 4, 34, 496, 11056}));
  CHECK(solve_k_labelled(DegreeWeights::polynomial({1, 0, 1}), 2, 9).values() ==
        r({1, 0, 6, 0, 336, 0, 77616, 0, 50916096}));
  CHECK(solve_k_labelled(DegreeWeights::exponential(), 3, 6).values() == r({1, 1, 11, 375, 27897, 3817137}));
}

TEST_CASE("free multilabelled solver") {
  CHECK(solve_free_multilabelled(DegreeWeights::polynomial({1, 0, 1}), 7).values() ==
        r({1, 1, 3, 9, 39, 189, 1107}));
  CHECK(solve_free_multilabelled(DegreeWeights::polynomial({1, 2, 1}), 7).values() ==
        r({1, 3, 11, 51, 295, 2055, 16715}));
  CHECK(solve_free_multilabelled(DegreeWeights::polynomial({1, 1, 1}), 5).values() == r({1, 2, 6, 24, 120}));
}

TEST_CASE("uni-bi solver") {
  CHECK(solve_unilabelled_bilabelled(DegreeWeights::exponential(), 7).values() == r({1, 2, 4, 14, 66, 392, 2806}));
  CHECK(solve_unilabelled_bilabelled(DegreeWeights::exponential(), 2).values() == r({1, 2}));
  const auto w = DegreeWeights::polynomial({3, 1});
  CHECK(solve_unilabelled_bilabelled(w, 1).at(1) == 3);
}

TEST_CASE("k-tuple solver, k = 1 counts recursive trees") {
  const auto s = solve_k_tuple(DegreeWeights::exponential(), 1, 6);
  for (int n = 1; n <= 6; ++n) CHECK(s.at(n) == recursive_trees_bruteforce(n));
}

TEST_CASE("k-tuple solver against the per-tree labelling count") {
  // sum over ordered trees of (n!/prod h)^2; gives 59 at n = 4
  const auto s = solve_k_tuple(DegreeWeights::bundled(1), 2, 5);
  for (std::size_t n = 1; n <= 5; ++n) {
    Integer sum = 0;
    for (const auto& t : enumerate_ordered_trees(n)) sum += count_k_tuple_labellings(t, 2);
    CHECK(s.at(n) == Rational(sum));
  }
  CHECK(s.at(4) == 59);
  for (unsigned k = 1; k <= 3; ++k) CHECK(solve_k_tuple(DegreeWeights::bundled(2), k, 1).at(1) == 1);
}

TEST_CASE("sequence access") {
  const auto s = solve_k_labelled(DegreeWeights::exponential(), 2, 3);
  CHECK_THROWS_AS(s.at(0), std::out_of_range);
  CHECK_THROWS_AS(s.at(4), std::out_of_range);
  CHECK(s.all_integral());
  const auto gf = s.generating_function();
  CHECK(gf.order() == 7);
  CHECK(gf[6] == make_rational(4, 720));
  CHECK(gf[5] == 0);
}

TEST_CASE("free scheme equals k = 1 with phi + t") {
  for (const auto& w : {DegreeWeights::polynomial({1, 0, 1}), DegreeWeights::polynomial({1, 2, 1}),
                        DegreeWeights::ordered_minus_t(), DegreeWeights::exp_minus_t(), DegreeWeights::exponential()}) {
    CHECK(solve_free_multilabelled(w, 10).values() == solve_k_labelled(plus_identity(w), 1, 10).values());
  }
}

TEST_CASE("integer weights give non-negative integers") {
  for (const auto& w : {DegreeWeights::bundled(1), DegreeWeights::bundled(2), DegreeWeights::polynomial({1, 2, 1})}) {
    for (const auto& s : {solve_k_labelled(w, 2, 10), solve_free_multilabelled(w, 10),
                          solve_unilabelled_bilabelled(w, 10), solve_k_tuple(w, 2, 8)}) {
      CHECK(s.all_integral());
      for (const auto& v : s.values()) CHECK(v >= 0);
    }
  }
}

TEST_CASE("first-order invariant") {
  const auto strict = DegreeWeights::polynomial({1, 0, 1});
  const auto t = solve_k_labelled(strict, 2, 10).generating_function();
  const auto rep = first_order_invariant_check(strict, t);
  CHECK(rep.holds());
  CHECK(rep.coefficient_ok.size() >= 21);

  // T = 1 - sqrt(1 - z^2) with phi = (1-t)^{-3}
  std::vector<Rational> c(21, Rational(0));
  c[0] = 1;
  c[2] = -1;
  const auto closed = RationalSeries::constant(1, 20) - sqrt(RationalSeries(c));
  CHECK(first_order_invariant_check(DegreeWeights::bundled(3), closed).holds());

  CHECK(first_order_invariant_check(DegreeWeights::exponential(), RationalSeries::zero(1)).holds());

  // a wrong pairing must fail
  CHECK_FALSE(first_order_invariant_check(DegreeWeights::bundled(2), closed).holds());
}
