#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "inctree/hook_identities.hpp"
#include "inctree/named_families.hpp"
#include "inctree/reverse_engineering.hpp"

using namespace inctree;

namespace {
std::vector<Rational> r(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("3-bundled input recovers (1-t)^{-3}") {
  const auto rep = reverse_engineer_family("bilabelled/3-bundled", 8);
  CHECK(rep.phi == r({1, 3, 6, 10, 15, 21, 28, 36}));
  CHECK(rep.admissible);
  CHECK(rep.guaranteed_order == 7);
  CHECK(rep.round_trip == true);
}

TEST_CASE("T(z) = 1/(1-z^2) - 1 recovers a cubic") {
  std::vector<Rational> tn;
  for (std::size_t n = 1; n <= 8; ++n) tn.emplace_back(factorial(2 * n));
  const auto rep = reverse_engineer(tn, 8);
  CHECK(rep.phi == r({2, 12, 18, 8, 0, 0, 0, 0}));
  CHECK(rep.admissible);
}

TEST_CASE("reduced tangent numbers recover exp") {
  const auto rep = reverse_engineer_family("bilabelled/unordered", 9);
  for (std::size_t j = 0; j < rep.phi.size(); ++j) CHECK(rep.phi[j] == make_rational(1, factorial(j)));
  CHECK(rep.round_trip == true);
}

TEST_CASE("2-bundled prefix recovers j+1") {
  const auto rep = reverse_engineer(r({1, 2, 22, 584}), 4);
  CHECK(rep.phi == r({1, 2, 3, 4}));
}

TEST_CASE("errors and non-admissible inputs") {
  CHECK_THROWS_AS(reverse_engineer(r({0, 1}), 2), std::domain_error);
  CHECK_THROWS_AS(reverse_engineer(r({1, 2}), 3), std::invalid_argument);
  const auto rep = reverse_engineer(r({1, -1, 0, 0}), 4);
  CHECK_FALSE(rep.admissible);
  REQUIRE(rep.first_violation.has_value());
  CHECK(rep.round_trip == true);
}

TEST_CASE("parametric families") {
  const auto a = family_from_parameters(1, -1, -1, 8);
  CHECK(a.case_label == "case (i)");
  CHECK(a.forms_agree);
  CHECK(a.report.phi == r({2, 12, 18, 8, 0, 0, 0, 0}));
  for (std::size_t j = 0; j < 8; ++j) {
    CHECK(a.closed_form_phi[j] == Rational(8 * binomial(3, j) - 6 * binomial(2, j)));
  }
  const auto b = family_from_parameters(1, make_rational(1, 2), 1, 8);
  CHECK(b.case_label == "case (ii)");
  CHECK(b.forms_agree);
  CHECK(b.report.phi == r({1, 3, 6, 10, 15, 21, 28, 36}));
  const auto c = family_from_parameters(1, make_rational(-1, 2), -1, 9);
  CHECK(c.integrality_holds);
  CHECK(c.forms_agree);
  CHECK(c.report.admissible);
  CHECK(c.report.phi[5] != 0);
  for (std::size_t j = 6; j < 9; ++j) CHECK(c.report.phi[j] == 0);  // 5-ary
  const auto d = family_from_parameters(2, make_rational(1, 3), 5, 8);
  CHECK(d.forms_agree);
  const auto e = family_from_parameters(1, make_rational(-2, 3), -1, 8);
  CHECK_FALSE(e.integrality_holds);
  CHECK(e.forms_agree);
  CHECK_FALSE(e.report.admissible);
  CHECK_THROWS_AS(family_from_parameters(-1, -1, -1, 4), std::invalid_argument);
  CHECK_THROWS_AS(family_from_parameters(1, 2, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(family_from_parameters(1, -1, 1, 4), std::invalid_argument);
}

TEST_CASE("discovered families satisfy the hook identity") {
  const auto c = family_from_parameters(1, make_rational(-1, 2), -1, 8);
  const auto w = weights_from_prefix(c.report.phi, "5-ary");
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto h = hook_sum_k_labelled(w, 2, n);
    CHECK(h.equal);
    CHECK(h.rhs == c.tn[n - 1] / Rational(factorial(2 * n)));
  }
}
