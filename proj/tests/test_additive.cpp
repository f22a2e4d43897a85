#include <doctest.h>

#include "contracts/additive.hpp"
#include "contracts/instances.hpp"
#include "contracts/verify.hpp"
#include "test_support.hpp"

using namespace contracts;
using namespace contracts::test;

TEST_CASE("partition reduction arithmetic") {
  Instance yes = partition_instance({1, 1, 2});
  CHECK(yes.f.additive_data()->values == std::vector<Rat>{Rat(1), Rat(1), Rat(2)});
  CHECK(yes.costs == std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(1)});
  OptResult opt = brute_force_opt_exact(yes);
  CHECK(opt.g_star_exact == ExactUtility::of(Rat(1)));  // exactly W/4
  // {2} and {0,1} tie at W/4; the smaller set wins
  CHECK(opt.s_star == AgentSet::from_members(3, {2}));

  OptResult no1 = brute_force_opt_exact(partition_instance({1, 1, 1}));
  CHECK(no1.g_star_exact.value == Rat(2, 3));
  CHECK(no1.g_star_exact.value < Rat(3, 4));  // W/4

  OptResult no2 = brute_force_opt_exact(partition_instance({2}));
  CHECK(no2.g_star_exact.value == Rat(0));
  CHECK(no2.g_star_exact.value < Rat(1, 2));
}

TEST_CASE("partition rejects bad weights") {
  CHECK_THROWS_AS(partition_instance({}), std::invalid_argument);
  CHECK_THROWS_AS(partition_instance({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(partition_instance({3, -1}), std::invalid_argument);
}

TEST_CASE("fptas: frozen examples") {
  Instance inst = additive_instance({2, 1, 1}, {1, 0.2, 0.2});
  SolveReport rep = fptas_additive(inst, 0.1);
  CHECK(rep.g >= 0.9 * 1.2 - 1e-12);

  Instance lone = additive_instance({5}, {1});
  SolveReport lone_rep = fptas_additive(lone, 0.5);
  CHECK(lone_rep.chosen == AgentSet::full(1));
  CHECK(lone_rep.g == doctest::Approx(4.0));

  SolveReport part = fptas_additive(partition_instance({1, 1, 2}), 0.01);
  CHECK(part.g >= 0.99 * 1.0 - 1e-12);
}

TEST_CASE("fptas guards its inputs") {
  Instance inst = additive_instance({2, 1}, {1, 0.2});
  CHECK_THROWS_AS(fptas_additive(inst, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fptas_additive(inst, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fptas_additive(inst, -0.5), std::invalid_argument);
  Instance cov = gen_random_coverage(5, 1, 10);
  CHECK_THROWS_AS(fptas_additive(cov, 0.1), std::invalid_argument);
}

TEST_CASE("fptas handles zero-value agents") {
  // agent 1 is worthless with positive cost, agent 2 worthless and free
  Instance inst = additive_instance({2, 0, 0}, {0.5, 1, 0});
  SolveReport rep = fptas_additive(inst, 0.25);
  CHECK(rep.chosen == AgentSet::from_members(3, {0}));
  CHECK(rep.g == doctest::Approx(1.5));
}

TEST_CASE("fptas meets the guarantee against exact optima") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    int n = 6 + static_cast<int>(seed % 7);
    Instance inst = gen_random_additive(n, seed);
    OptResult opt = brute_force_opt(inst);
    ExactUtility star = principal_utility_exact(inst, opt.s_star);
    REQUIRE(star.finite);
    for (double eps : {0.3, 0.1, 0.03}) {
      SolveReport rep = fptas_additive(inst, eps);
      ExactUtility got = principal_utility_exact(inst, rep.chosen);
      REQUIRE(got.finite);
      Rat slack(1, 1'000'000'000'000LL);
      CHECK(got.value >= (Rat(1) - rat_from_double(eps)) * star.value - slack);
    }
  }
}

TEST_CASE("the cheapest-share table matches direct enumeration") {
  Instance inst = gen_random_additive(9, 314);
  const std::vector<Rat>& values = inst.f.additive_data()->values;
  std::vector<int> agents;
  std::vector<double> cost_share(9);
  for (int i = 0; i < 9; ++i) {
    agents.push_back(i);
    cost_share[i] = inst.costs_d[i] / to_double(values[i]);
  }
  const Rat eps(1, 10);
  const Rat delta = eps / 9;
  const Rat b = values[4];
  const Rat delta_b = delta * b;
  long long grid = rat_ceil(Rat(9) / delta).convert_to<long long>();

  std::vector<double> row =
      detail::fptas_cheapest_share_row(agents, values, cost_share, delta_b, grid);

  // Oracle: enumerate all subsets, with exact rounded weights.
  std::vector<long long> weight(9);
  for (int i = 0; i < 9; ++i) {
    BigInt w = rat_floor(values[i] / delta_b);
    weight[i] = w > grid ? grid : w.convert_to<long long>();
  }
  std::vector<double> best(grid + 1, std::numeric_limits<double>::infinity());
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    long long reach = 0;
    double share = 0;
    for (int i = 0; i < 9; ++i) {
      if (mask >> i & 1) {
        reach = std::min<long long>(grid, reach + weight[i]);
        share += cost_share[i];
      }
    }
    for (long long x = 0; x <= reach; ++x) best[x] = std::min(best[x], share);
  }
  for (long long x = 0; x <= grid; ++x) {
    if (std::isinf(best[x])) {
      CHECK(std::isinf(row[x]));
    } else {
      CHECK(row[x] == doctest::Approx(best[x]).epsilon(1e-12));
    }
  }
}
