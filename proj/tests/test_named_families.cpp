#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <functional>

#include "doctest.h"
#include "inctree/named_families.hpp"
#include "inctree/series.hpp"

using namespace inctree;

namespace {

std::vector<Integer> z(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// B_{k,m} by enumerating set partitions of {1..k} into m blocks.
Rational bell_oracle(std::size_t k, std::size_t m, const std::vector<Rational>& xs) {
  Rational total = 0;
  std::vector<std::size_t> block_sizes;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == k) {
      if (block_sizes.size() != m) return;
      Rational p = 1;
      for (auto s : block_sizes) p *= xs[s - 1];
      total += p;
      return;
    }
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
      ++block_sizes[b];
      go(i + 1);
      --block_sizes[b];
    }
    block_sizes.push_back(1);
    go(i + 1);
    block_sizes.pop_back();
  };
  go(0);
  return total;
}

}  // namespace

TEST_CASE("inverse-erf coefficients") {
  const auto c = inverse_erf_coefficients(3);
  CHECK(c[0] == 1);
  CHECK(c[1] == 1);
  CHECK(c[2] == make_rational(7, 6));
  CHECK(ordered_bilabelled_closed_form(1) == 1);
  CHECK(ordered_bilabelled_closed_form(3) == 7);
  CHECK(ordered_bilabelled_closed_form(4) == 127);
  CHECK(ordered_bilabelled_closed_form(6) == 243649);
}

TEST_CASE("double factorial closed form") {
  CHECK(three_bundled_closed_form(1) == 1);
  CHECK(three_bundled_closed_form(3) == 45);
  CHECK(three_bundled_closed_form(5) == 99225);
}

TEST_CASE("partial Bell polynomials") {
  const Rational x1 = make_rational(2, 3), x2 = 5, x3 = make_rational(-1, 7), x4 = 11;
  CHECK(partial_bell(1, 1, {x1}) == x1);
  CHECK(partial_bell(2, 1, {x1, x2}) == x2);
  CHECK(partial_bell(3, 2, {x1, x2}) == 3 * x1 * x2);
  const std::vector<Rational> xs{x1, x2, x3, x4, 2, 3};
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t m = 1; m <= k; ++m) CHECK(partial_bell(k, m, xs) == bell_oracle(k, m, xs));
  }
  CHECK_THROWS_AS(partial_bell(2, 3, xs), std::invalid_argument);
  CHECK_THROWS_AS(partial_bell(4, 1, {x1}), std::invalid_argument);
}

TEST_CASE("2-bundled closed form and recurrence") {
  CHECK(two_bundled_closed_form(2) == 2);
  CHECK(two_bundled_closed_form(3) == 22);
  CHECK(two_bundled_closed_form(5) == 28384);
  CHECK(two_bundled_recurrence(6) == z({1, 2, 22, 584, 28384, 2190128}));
  for (std::size_t n = 1; n <= 10; ++n) CHECK(two_bundled_closed_form(n) == two_bundled_recurrence(10)[n - 1]);
}

TEST_CASE("erratum: the uncorrected Bell form misses the sequence") {
  CHECK(two_bundled_closed_form_uncorrected(2) == make_rational(1, 8));
  CHECK(two_bundled_closed_form_uncorrected(3) == make_rational(143, 128));
}

TEST_CASE("special recurrences") {
  CHECK(strict_binary_recurrence(5) == z({1, 0, 6, 0, 336}));
  CHECK(binary_bilabelled_recurrence(7) == z({1, 2, 10, 80, 1000, 17600, 418000}));
  CHECK(even_degree_recurrence(7) == z({1, 0, 3, 0, 189, 0, 68607}));
  CHECK(ordered_bilabelled_recurrence(6) == z({1, 1, 7, 127, 4369, 243649}));
  CHECK(blasius_numbers(6) == z({1, 1, 11, 375, 27897, 3817137}));
}

TEST_CASE("lemniscate sine") {
  const auto s = lemniscate_sine_coefficients(9);
  CHECK(s[0] == 1);
  CHECK(s[1] == 0);
  CHECK(s[2] == 0);
  CHECK(s[3] == 0);
  CHECK(s[4] == -12);
  // oracle: Picard iteration of sl = z - 2 int int sl^3 on series
  RationalSeries sl = RationalSeries::identity(9);
  for (int it = 0; it < 5; ++it) {
    sl = RationalSeries::identity(9) + Rational(-2) * truncate(integrate(integrate(sl * sl * sl)), 9);
  }
  for (std::size_t n = 1; n <= 9; ++n) CHECK(Rational(s[n - 1]) == sl[n] * Rational(factorial(n)));
}

TEST_CASE("even-degree lemniscate relation") {
  const auto rows = even_degree_lemniscate_relation_check(9);
  for (const auto& r : rows) CHECK(r.holds);
  CHECK(rows[2].t == 3);
  CHECK(rows[2].s == -12);
  CHECK(rows[1].t == 0);
  CHECK(rows[4].t == 189);
}

TEST_CASE("Q sequence") {
  const auto q = unibi_q_sequence(7);
  CHECK(q == z({1, 1, 3, 11, 55, 337, 2469}));
  CHECK(q[1] == 1);
  std::vector<Integer> t;
  for (std::size_t m = 1; m <= 7; ++m) t.push_back(q[m - 1] + (m >= 2 ? q[m - 2] : Integer(0)));
  CHECK(t == z({1, 2, 4, 14, 66, 392, 2806}));
}

TEST_CASE("Weierstrass invariants") {
  const auto s = weierstrass_invariants(1, 0, 1);
  CHECK(s.g2 == make_rational(-1, 3));
  CHECK(s.g3 == 0);
  const auto b = weierstrass_invariants(1, 2, 1);
  CHECK(b.g2 == 0);
  CHECK(b.g3 == make_rational(1, 54));
  CHECK(b.p_at_c == make_rational(1, 6));
  CHECK(weierstrass_invariants(3, 0, 7).g3 == 0);
}

TEST_CASE("strict-binary lattice sum") {
  const auto exact = strict_binary_recurrence(7);
  CHECK(std::abs(strict_binary_lattice_sum(2, 50).value) <= 1e-6L);
  for (std::size_t n : {3, 5, 7}) {
    const auto l = strict_binary_lattice_sum(n, 50);
    const long double e = exact[n - 1].get_d();
    CHECK(std::abs(l.value - e) / e <= 1e-6L);
    CHECK(std::abs(l.residual) <= 1e-6L * e);
  }
}

TEST_CASE("strict-binary free multilabelled explicit form") {
  CHECK(strict_binary_free_multi_explicit(1) == 1);
  CHECK(strict_binary_free_multi_explicit(4) == 9);
  CHECK(strict_binary_free_multi_explicit(7) == 1107);
  const auto s = solve_free_multilabelled(DegreeWeights::polynomial({1, 0, 1}), 12).integers();
  for (std::size_t m = 1; m <= 12; ++m) CHECK(strict_binary_free_multi_explicit(m) == s[m - 1]);
}

TEST_CASE("binary free multilabelled series") {
  CHECK(std::abs(binary_free_multi_numeric(1, 60) - 1) <= 1e-6L);
  CHECK(std::abs(binary_free_multi_numeric(3, 60) - 11) <= 1e-6L);
  CHECK(std::abs(binary_free_multi_numeric(5, 60) - 295) <= 1e-6L);
}

TEST_CASE("reduced tangent numbers") {
  const auto rows = reduced_tangent_check(10);
  for (const auto& r : rows) CHECK(r.holds);
  CHECK(rows[0].from_tangent == 1);
  CHECK(rows[2].from_tangent == 4);
  CHECK(rows[4].from_tangent == 496);
}

TEST_CASE("registry cross-validation") {
  for (const auto& f : builtin_families()) {
    CAPTURE(f.id);
    const auto s = f.sequence(10).integers();
    for (std::size_t i = 0; i < f.reference.size(); ++i) CHECK(s[i] == f.reference[i]);
    if (f.closed_form) CHECK(f.closed_form(10) == s);
  }
  CHECK(builtin_families().size() == 14);
}

TEST_CASE("free families transfer to k = 1") {
  for (const auto& f : builtin_families()) {
    if (f.scheme.kind != SchemeKind::free_multilabelled) continue;
    CAPTURE(f.id);
    CHECK(f.sequence(10).values() == solve_k_labelled(plus_identity(f.weights), 1, 10).values());
  }
}

TEST_CASE("registry lookup") {
  CHECK(find_family("unibi/unordered").scheme == LabellingScheme::unilabelled_bilabelled());
  const auto kt = find_family("ktuple/ordered:k=2");
  CHECK(kt.scheme == LabellingScheme::k_tuple(2));
  CHECK(kt.sequence(3).values() == std::vector<Rational>{1, 1, 5});
  CHECK(find_family("k-labelled/poly:1,0,1:k=3").scheme == LabellingScheme::k_labelled(3));
  CHECK(find_family("bilabelled/bundled:4").weights.coefficient(1) == 4);
  CHECK_THROWS_AS(find_family("nosuch"), std::invalid_argument);
  CHECK_THROWS_AS(find_family("bilabelled/sin"), std::invalid_argument);
  CHECK_THROWS_AS(find_family("free/exp:k=2"), std::invalid_argument);
}
