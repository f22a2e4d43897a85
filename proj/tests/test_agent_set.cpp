#include <doctest.h>

#include <stdexcept>

#include "contracts/agent_set.hpp"
#include "contracts/rng.hpp"

using namespace contracts;

TEST_CASE("membership and structural operations") {
  AgentSet s(10);
  CHECK(s.empty());
  s.add(3);
  s.add(7);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  s.remove(3);
  CHECK_FALSE(s.contains(3));
  CHECK(s.with(0).contains(0));
  CHECK_FALSE(s.with(0).contains(1));
  CHECK(s.without(7).empty());
  CHECK_THROWS_AS(s.add(10), std::out_of_range);
  CHECK_THROWS_AS(s.contains(-1), std::out_of_range);
}

TEST_CASE("set algebra and subset tests") {
  AgentSet a = AgentSet::from_members(8, {0, 2, 5});
  AgentSet b = AgentSet::from_members(8, {2, 5, 7});
  CHECK(a.set_union(b) == AgentSet::from_members(8, {0, 2, 5, 7}));
  CHECK(a.set_intersect(b) == AgentSet::from_members(8, {2, 5}));
  CHECK(a.set_minus(b) == AgentSet::from_members(8, {0}));
  CHECK(AgentSet::from_members(8, {2, 5}).subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(AgentSet(8).subset_of(a));
  CHECK_THROWS_AS(a.subset_of(AgentSet(9)), std::invalid_argument);
}

TEST_CASE("mask round trip and member listing") {
  AgentSet s = AgentSet::from_mask(6, 0b101001);
  CHECK(s.members() == std::vector<int>{0, 3, 5});
  CHECK(s.to_mask() == 0b101001);
  CHECK(s.to_string() == "{0, 3, 5}");
  CHECK(AgentSet::range(6, 2, 5) == AgentSet::from_members(6, {2, 3, 4}));
  CHECK(AgentSet::full(3).size() == 3);
  CHECK_THROWS_AS(AgentSet::from_mask(4, 0b10000), std::out_of_range);
}

TEST_CASE("member-list lexicographic order") {
  auto mk = [](std::initializer_list<int> m) { return AgentSet::from_members(70, m); };
  CHECK(AgentSet::lex_less(mk({0, 3}), mk({1, 2})));
  CHECK_FALSE(AgentSet::lex_less(mk({1, 2}), mk({0, 3})));
  CHECK(AgentSet::lex_less(mk({0}), mk({0, 1})));       // prefix is smaller
  CHECK_FALSE(AgentSet::lex_less(mk({0, 1}), mk({0})));
  CHECK(AgentSet::lex_less(mk({0, 1}), mk({1})));
  CHECK_FALSE(AgentSet::lex_less(mk({1}), mk({0, 1})));
  CHECK(AgentSet::lex_less(mk({}), mk({0})));
  CHECK_FALSE(AgentSet::lex_less(mk({5}), mk({5})));
  // across word boundaries
  CHECK(AgentSet::lex_less(mk({0, 65}), mk({1, 2})));
  CHECK(AgentSet::lex_less(mk({64}), mk({65})));
  CHECK(AgentSet::lex_less(mk({64}), mk({64, 65})));
}

TEST_CASE("tie order: cardinality first, then lexicographic") {
  auto mk = [](std::initializer_list<int> m) { return AgentSet::from_members(8, m); };
  CHECK(AgentSet::tie_less(mk({7}), mk({0, 1})));
  CHECK(AgentSet::tie_less(mk({0, 3}), mk({1, 2})));
  CHECK_FALSE(AgentSet::tie_less(mk({1, 2}), mk({0, 3})));
  CHECK_FALSE(AgentSet::tie_less(mk({3}), mk({3})));
}

TEST_CASE("lexicographic order agrees with direct member-list comparison") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    AgentSet a(20), b(20);
    for (int i = 0; i < 20; ++i) {
      if (rng.chance(1, 3)) a.add(i);
      if (rng.chance(1, 3)) b.add(i);
    }
    bool expected = a.members() < b.members();  // vector lexicographic
    CHECK(AgentSet::lex_less(a, b) == expected);
  }
}

TEST_CASE("large universes") {
  AgentSet s(1000);
  s.add(999);
  s.add(64);
  s.add(0);
  CHECK(s.size() == 3);
  CHECK(s.members() == std::vector<int>{0, 64, 999});
  CHECK(s.subset_of(AgentSet::full(1000)));
  Rng rng(5);
  AgentSet t = rng.subset_of_size(1000, 501);
  CHECK(t.size() == 501);
}
