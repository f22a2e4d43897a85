#include <doctest.h>

#include "contracts/additive.hpp"
#include "contracts/instance_io.hpp"
#include "contracts/instances.hpp"
#include "contracts/verify.hpp"
#include "test_support.hpp"

using namespace contracts;
using namespace contracts::test;

TEST_CASE("subadditive hidden-set family construction") {
  Instance inst = gen_subadditive_lb(16, AgentSet::range(16, 0, 9));
  CHECK(inst.costs == std::vector<Rat>(16, Rat(1, 8)));
  CHECK(inst.f.value_exact(AgentSet::range(16, 0, 9)) == Rat(9));
  CHECK(inst.f.value_exact(AgentSet::range(16, 0, 8)) == Rat(7));
  CHECK(inst.f.value_exact(AgentSet::range(16, 0, 5)) == Rat(11, 2));  // 3 + 2*5/4
  CHECK(inst.f.value_exact(AgentSet::full(16)) == Rat(10));
  CHECK(inst.meta.family == "subadditive-lb");
  REQUIRE(inst.meta.t_star.has_value());

  Instance seeded = gen_subadditive_lb(16, {}, 7);
  CHECK(seeded.meta.t_star->size() == 9);
  CHECK(gen_subadditive_lb(16, {}, 7) == seeded);  // deterministic
  CHECK(gen_subadditive_lb(16, {}, 8) != seeded);

  CHECK_THROWS_AS(gen_subadditive_lb(15), std::invalid_argument);  // odd
  CHECK_THROWS_AS(gen_subadditive_lb(18), std::invalid_argument);  // not a square
  CHECK_THROWS_AS(gen_subadditive_lb(16, AgentSet::range(16, 0, 4)), std::invalid_argument);
}

TEST_CASE("xos hidden-set family construction and dual representation") {
  Instance inst = gen_xos_lb(100, AgentSet::range(100, 0, 51));
  CHECK(inst.costs[0] == Rat(5, 10200));
  ExactUtility g_t = principal_utility_exact(inst, AgentSet::range(100, 0, 51));
  CHECK(g_t.value == Rat(51, 40));  // (2.5 + 5/n) / 2 at n = 100
  CHECK(g_t.value >= Rat(5, 4));

  CHECK_THROWS_AS(gen_xos_lb(9), std::invalid_argument);

  // both representations agree on every subset at n = 10
  Instance ten = gen_xos_lb(10, AgentSet::range(10, 0, 6));
  auto clauses = bump_support_clauses(10, AgentSet::range(10, 0, 6));
  RewardFunction clause_form = RewardFunction::xos(10, clauses);
  for (std::uint32_t mask = 0; mask < 1024; ++mask) {
    AgentSet s = mask_set(10, mask);
    CHECK(ten.f.value_exact(s) == clause_form.value_exact(s));
  }
}

TEST_CASE("random generators are deterministic and well-formed") {
  CHECK(gen_random_additive(8, 1) == gen_random_additive(8, 1));
  CHECK(gen_random_additive(8, 1) != gen_random_additive(8, 2));
  CHECK(gen_random_coverage(10, 7, 30) == gen_random_coverage(10, 7, 30));
  CHECK(gen_random_xos(8, 3, 5) == gen_random_xos(8, 3, 5));

  Instance cov = gen_random_coverage(10, 7, 30);
  CHECK(check_class(cov, FunctionClass::kSubmodular).pass);
  CHECK(check_class(cov, FunctionClass::kMonotone).pass);

  Instance xos = gen_random_xos(8, 3, 5);
  CHECK(xos.f.value_exact(AgentSet(8)) == 0);
  CHECK(check_class(xos, FunctionClass::kMonotone).pass);

  // costs never exceed the singleton value, so cheap agents exist
  for (int i = 0; i < 8; ++i) {
    CHECK(xos.costs[i] <= xos.f.singleton_value_exact(i));
  }

  CHECK_THROWS_AS(gen_random_coverage(5, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_xos(5, 1, 0), std::invalid_argument);
}

TEST_CASE("serialize/parse is the identity on every representation") {
  std::vector<Instance> corpus = {
      gen_random_additive(6, 11),
      gen_random_coverage(7, 12, 19),
      gen_random_xos(6, 13, 4),
      gen_subadditive_lb(16, {}, 3),
      gen_xos_lb(10, {}, 4),
      partition_instance({1, 1, 2}),
      Instance::make({Rat(1, 3), Rat(2, 7)}, supermodular_pair()),
  };
  for (const Instance& inst : corpus) {
    Instance back = parse_instance(serialize_instance(inst));
    CHECK(back == inst);
  }
}

TEST_CASE("a symmetric-table instance survives the round trip") {
  std::vector<Rat> table = {Rat(0), Rat(1), Rat(3, 2), Rat(3, 2)};
  Instance inst = Instance::make(std::vector<Rat>(3, Rat(1, 10)),
                                 RewardFunction::symmetric(table));
  CHECK(parse_instance(serialize_instance(inst)) == inst);
}

TEST_CASE("parse rejects malformed documents with line numbers") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_instance(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };

  expect_error("bogus header\n", 1);
  // costs length mismatch
  expect_error(
      "contract-instance v1\nn = 3\ncosts = 1 2\nreward.kind = additive\n"
      "reward.values = 1 1 1\n",
      3);
  // unnormalized cardinality table
  expect_error(
      "contract-instance v1\nn = 2\ncosts = 0 0\nreward.kind = symmetric-table\n"
      "reward.table = 1 2 3\n",
      4);
  // decreasing cardinality table
  expect_error(
      "contract-instance v1\nn = 2\ncosts = 0 0\nreward.kind = symmetric-table\n"
      "reward.table = 0 2 1\n",
      4);
  // unknown key
  expect_error(
      "contract-instance v1\nn = 1\ncosts = 0\nreward.kind = additive\n"
      "reward.values = 1\nreward.bump = 3\n",
      6);
  // bad number
  expect_error(
      "contract-instance v1\nn = 1\ncosts = zero\nreward.kind = additive\n"
      "reward.values = 1\n",
      3);
  // duplicate key
  expect_error(
      "contract-instance v1\nn = 1\nn = 2\ncosts = 0\nreward.kind = additive\n"
      "reward.values = 1\n",
      3);
  // negative cost
  expect_error(
      "contract-instance v1\nn = 1\ncosts = -1\nreward.kind = additive\n"
      "reward.values = 1\n",
      3);
  // unknown reward kind
  expect_error(
      "contract-instance v1\nn = 1\ncosts = 0\nreward.kind = mystery\n",
      4);
  // unnormalized full table
  expect_error(
      "contract-instance v1\nn = 1\ncosts = 0\nreward.kind = table\n"
      "reward.subset-values = 1 2\n",
      4);
}

TEST_CASE("metadata survives the round trip") {
  Instance inst = gen_subadditive_lb(16, {}, 9);
  inst.meta.note = "hidden set drawn from seed 9";
  Instance back = parse_instance(serialize_instance(inst));
  CHECK(back.meta.family == "subadditive-lb");
  CHECK(back.meta.seed == 9);
  CHECK(back.meta.t_star == inst.meta.t_star);
  CHECK(back.meta.note == inst.meta.note);
  REQUIRE(back.meta.warnings.size() == 1);
}

TEST_CASE("comments and blank lines are tolerated") {
  Instance inst = parse_instance(
      "contract-instance v1\n"
      "# a comment\n"
      "\n"
      "n = 2\n"
      "costs = 0.5 0.25\n"
      "reward.kind = additive\n"
      "reward.values = 2 1\n");
  CHECK(inst.agents() == 2);
  CHECK(inst.costs[0] == Rat(1, 2));
}
