#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "inctree/bijections.hpp"
#include "inctree/named_families.hpp"
#include "inctree/ode_engine.hpp"
#include "inctree/tree_space.hpp"

using namespace inctree;

TEST_CASE("object text round trip") {
  const auto t = LabelledTree::parse("({1,2}b ({3}w) ({4}))");
  CHECK(t.labels == std::vector<int>{1, 2});
  CHECK(t.color == Color::black);
  CHECK(t.children.size() == 2);
  CHECK(t.to_string() == "({1,2}b ({3}w) ({4}))");
  CHECK(t.label_count() == 4);
  CHECK_THROWS_AS(LabelledTree::parse("({1,2}"), std::invalid_argument);
  CHECK_THROWS_AS(LabelledTree::parse("({})"), std::invalid_argument);
}

TEST_CASE("chain map examples") {
  CHECK(multi_to_colored(LabelledTree::parse("({1,2,3})")).to_string() == "({1}b ({2}b ({3}w)))");
  const auto singles = LabelledTree::parse("({1} ({2} ({4})) ({3}))");
  CHECK(multi_to_colored(singles).to_string() == "({1}w ({2}w ({4}w)) ({3}w))");
  for (const auto& text : {"({1,2,3})", "({1} ({2} ({4})) ({3}))", "({1,2} ({3,5}) ({4}))"}) {
    const auto t = LabelledTree::parse(text);
    CHECK(colored_to_multi(multi_to_colored(t)) == t);
  }
}

TEST_CASE("chain map rejects bad input") {
  CHECK_THROWS_WITH_AS(multi_to_colored(LabelledTree::parse("({2} ({1}))")), "labelling not increasing below {2}",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(colored_to_multi(LabelledTree::parse("({1}b ({2}w) ({3}w))")),
                       "black node {1} has out-degree 2, expected 1", std::invalid_argument);
  CHECK_THROWS_AS(multi_to_colored(LabelledTree::parse("({1} ({3}))")), std::invalid_argument);
}

TEST_CASE("split map examples") {
  const auto single = unibi_to_q(LabelledTree::parse("({1})"));
  CHECK(single.tree.to_string() == "({1}w)");
  CHECK_FALSE(single.dropped_root_label);
  const auto pair = unibi_to_q(LabelledTree::parse("({1,2})"));
  CHECK(pair.tree.to_string() == "({1}w)");
  CHECK(pair.dropped_root_label);
  CHECK(q_to_unibi(pair) == LabelledTree::parse("({1,2})"));
  const auto t = LabelledTree::parse("({1} ({2,3} ({4})) ({5}))");
  const auto q = unibi_to_q(t);
  CHECK(q.tree.to_string() == "({1}b ({2}w ({5}w)) ({3}w ({4}w)))");
  CHECK(q_to_unibi(q) == t);
  CHECK_THROWS_WITH_AS(q_to_unibi({LabelledTree::parse("({1}b ({2}w))"), false}),
                       "black node {1} has out-degree 1, expected >= 2", std::invalid_argument);
  CHECK_THROWS_AS(unibi_to_q(LabelledTree::parse("({1,2,3})")), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_objects(ObjectScheme::free_ordered, 3).size() == 6);
  CHECK(enumerate_objects(ObjectScheme::unibi_unordered, 2).size() == 2);
  CHECK(enumerate_objects(ObjectScheme::colored_branching_unordered, 3).size() == 3);
  CHECK(enumerate_objects(ObjectScheme::unibi_unordered, 4).size() == 14);
  CHECK_THROWS_AS(enumerate_objects(ObjectScheme::free_ordered, 8), CapacityError);
  const auto free_counts = solve_free_multilabelled(DegreeWeights::bundled(1), 6);
  const auto unary = solve_k_labelled(plus_identity(DegreeWeights::bundled(1)), 1, 6);
  const auto unibi = solve_unilabelled_bilabelled(DegreeWeights::exponential(), 6);
  const auto q = unibi_q_sequence(6);
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto fo = enumerate_objects(ObjectScheme::free_ordered, m);
    CHECK(Rational(static_cast<unsigned long>(fo.size())) == free_counts.at(m));
    CHECK(Rational(static_cast<unsigned long>(enumerate_objects(ObjectScheme::colored_unary_ordered, m).size())) ==
          unary.at(m));
    CHECK(Rational(static_cast<unsigned long>(enumerate_objects(ObjectScheme::unibi_unordered, m).size())) ==
          unibi.at(m));
    CHECK(Integer(static_cast<unsigned long>(enumerate_objects(ObjectScheme::colored_branching_unordered, m).size())) ==
          q[m - 1]);
    std::set<std::string> distinct;
    for (const auto& t : fo) {
      validate(t, ObjectScheme::free_ordered);
      distinct.insert(t.to_string());
    }
    CHECK(distinct.size() == fo.size());
  }
}

TEST_CASE("exhaustive bijection checks") {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto chain = verify_chain_bijection(m);
    CAPTURE(chain.first_failure);
    CHECK(chain.ok());
    CHECK(chain.domain_count == chain.codomain_count);
    const auto split = verify_split_bijection(m);
    CAPTURE(split.first_failure);
    CHECK(split.ok());
    CHECK(split.domain_count == split.codomain_count);
  }
}

TEST_CASE("image constraints") {
  for (const auto& t : enumerate_objects(ObjectScheme::free_ordered, 5)) {
    CHECK_NOTHROW(validate(multi_to_colored(t), ObjectScheme::colored_unary_ordered));
  }
  for (const auto& t : enumerate_objects(ObjectScheme::unibi_unordered, 5)) {
    CHECK_NOTHROW(validate(unibi_to_q(t).tree, ObjectScheme::colored_branching_unordered));
  }
}
