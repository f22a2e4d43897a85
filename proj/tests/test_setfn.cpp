#include <doctest.h>

#include <cmath>

#include "contracts/instances.hpp"
#include "contracts/oracles.hpp"
#include "contracts/rng.hpp"
#include "test_support.hpp"

using namespace contracts;
using namespace contracts::test;

namespace {

Instance lb16() { return gen_subadditive_lb(16, AgentSet::range(16, 0, 9)); }

Instance xos_lb100() { return gen_xos_lb(100, AgentSet::range(100, 0, 51)); }

}  // namespace

TEST_CASE("value queries follow the closed forms") {
  RewardFunction f = RewardFunction::additive(rats({2, 1, 1}));
  CHECK(eval(f, AgentSet::from_members(3, {0, 2})) == 3.0);
  CHECK(eval(f, AgentSet(3)) == 0.0);

  Instance lb = lb16();
  AgentSet hidden = *lb.meta.t_star;
  CHECK(hidden.size() == 9);
  CHECK(eval_exact(lb.f, hidden) == Rat(9));  // 4 + sqrt(16) + 1
  CHECK(eval_exact(lb.f, AgentSet::range(16, 0, 8)) == Rat(7));
  CHECK(eval_exact(lb.f, AgentSet(16)) == 0);

  // every kind is normalized
  CHECK(eval(xos_lb100().f, AgentSet(100)) == 0.0);
  CHECK(eval(supermodular_pair(), AgentSet(2)) == 0.0);
}

TEST_CASE("value queries reject mismatched universes and count") {
  RewardFunction f = RewardFunction::additive(rats({2, 1, 1}));
  QueryCounter qc;
  eval(f, AgentSet(3), &qc);
  CHECK(qc.value_queries == 1);
  CHECK_THROWS_AS(eval(f, AgentSet(4)), std::invalid_argument);
}

TEST_CASE("marginals are value-query pairs") {
  RewardFunction f = RewardFunction::additive(rats({2, 1, 1}));
  QueryCounter qc;
  CHECK(marginal(f, 0, AgentSet(3), &qc) == 2.0);
  CHECK(qc.value_queries == 2);

  // member and non-member calls agree with f(S+i) - f(S-i)
  AgentSet s = AgentSet::from_members(3, {0, 1});
  CHECK(marginal(f, 0, s) == 2.0);
  CHECK(marginal(f, 2, s) == 1.0);

  Instance lb = lb16();
  AgentSet hidden = *lb.meta.t_star;
  CHECK(marginal_exact(lb.f, 0, hidden) == Rat(2));

  Instance xl = xos_lb100();
  CHECK(marginal_exact(xl.f, 0, *xl.meta.t_star) == Rat(1, 20));  // 5/n
}

TEST_CASE("marginal identity holds on random representations") {
  Rng rng(77);
  std::vector<Instance> corpus = {gen_random_additive(9, 4), gen_random_coverage(9, 5, 24),
                                  gen_random_xos(9, 6, 5)};
  for (const Instance& inst : corpus) {
    for (int trial = 0; trial < 50; ++trial) {
      AgentSet s(9);
      for (int i = 0; i < 9; ++i) {
        if (rng.chance(1, 2)) s.add(i);
      }
      int agent = rng.below_int(9);
      CHECK(marginal_exact(inst.f, agent, s) ==
            eval_exact(inst.f, s.with(agent)) - eval_exact(inst.f, s.without(agent)));
    }
  }
}

TEST_CASE("coverage evaluation matches an element-by-element scan") {
  Rng rng(3);
  Instance inst = gen_random_coverage(10, 42, 25);
  const CoverageData& data = *inst.f.coverage_data();
  for (int trial = 0; trial < 200; ++trial) {
    AgentSet s(10);
    for (int i = 0; i < 10; ++i) {
      if (rng.chance(1, 2)) s.add(i);
    }
    CHECK(eval_exact(inst.f, s) == naive_coverage_value(data, s));
  }
}

TEST_CASE("exact demand on additive rewards") {
  RewardFunction f = RewardFunction::additive(rats({4, 3}));
  QueryCounter qc;
  AgentSet d = exact_demand(f, PriceVector{{1, 5}}, &qc);
  CHECK(d == AgentSet::from_members(2, {0}));
  CHECK(qc.demand_queries == 1);

  // value == price adds nothing; the smaller set wins the tie
  CHECK(exact_demand(f, PriceVector{{4, 1}}) == AgentSet::from_members(2, {1}));
}

TEST_CASE("exact demand on the cardinality family uses the cheapest agents") {
  // Base table of the n=16 family without the bump.
  std::vector<Rat> table(17);
  for (int k = 1; k <= 16; ++k) {
    table[k] = k <= 8 ? Rat(3) + Rat(2 * k, 4) : Rat(std::min(6, k - 8 + 3) + 4);
  }
  RewardFunction f = RewardFunction::symmetric(table);

  // Oracle: direct enumeration of all 2^16 subsets.
  PriceVector uniform = PriceVector::uniform(16, 0.1);
  AgentSet best(16);
  double best_obj = 0;
  for (std::uint32_t mask = 1; mask < (1u << 16); ++mask) {
    AgentSet s = mask_set(16, mask);
    double obj = f.value(s) - uniform.total(s);
    if (obj > best_obj || (obj == best_obj && AgentSet::tie_less(s, best))) {
      best_obj = obj;
      best = s;
    }
  }
  AgentSet got = exact_demand(f, uniform);
  CHECK(got == best);
  // 11 agents at value 10 beat the full set: 10 - 1.1 vs 10 - 1.6.
  CHECK(got == AgentSet::range(16, 0, 11));
  CHECK(f.value(got) - uniform.total(got) == doctest::Approx(8.9));
}

TEST_CASE("exact demand with a bump candidate and infinite prices") {
  Instance lb = lb16();
  AgentSet hidden = *lb.meta.t_star;  // {0..8}

  // With huge uniform prices only the empty set survives.
  CHECK(exact_demand(lb.f, PriceVector::uniform(16, 100.0)) == AgentSet(16));
  CHECK(exact_demand(lb.f, PriceVector::infinite(16)) == AgentSet(16));

  // Price the hidden set low and everyone else out: demand finds it.
  PriceVector p = PriceVector::infinite(16);
  hidden.for_each([&](int i) { p.p[i] = 0.25; });
  CHECK(exact_demand(lb.f, p) == hidden);
}

TEST_CASE("structured demand agrees with enumeration on a table twin") {
  Instance lb = gen_subadditive_lb(16, AgentSet::range(16, 2, 11));
  Rng rng(9);
  // Twin with identical values but the enumerated-demand representation.
  // (table kind is capped at 2^16 values, fine here)
  std::vector<Rat> by_mask(1u << 16);
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    by_mask[mask] = lb.f.value_exact(mask_set(16, mask));
  }
  RewardFunction twin = RewardFunction::table(16, std::move(by_mask));
  for (int trial = 0; trial < 8; ++trial) {
    PriceVector p{std::vector<double>(16)};
    for (double& x : p.p) {
      x = rng.chance(1, 8) ? std::numeric_limits<double>::infinity() : rng.dyadic01(8);
    }
    AgentSet structured = exact_demand(lb.f, p);
    AgentSet enumerated = exact_demand(twin, p);
    CHECK(structured == enumerated);
  }
}

TEST_CASE("exact demand dominates every subset of the support") {
  Rng rng(123);
  std::vector<Instance> corpus = {gen_random_additive(10, 21), gen_random_coverage(10, 22, 30),
                                  gen_random_xos(10, 23, 6)};
  for (const Instance& inst : corpus) {
    for (int trial = 0; trial < 5; ++trial) {
      PriceVector p{std::vector<double>(10)};
      for (double& x : p.p) {
        x = rng.chance(1, 10) ? std::numeric_limits<double>::infinity() : rng.dyadic01(6);
      }
      AgentSet chosen = exact_demand(inst.f, p);
      CHECK(chosen.subset_of(p.finite_support()));
      double chosen_obj = inst.f.value(chosen) - p.total(chosen);
      for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        AgentSet s = mask_set(10, mask);
        if (!s.subset_of(p.finite_support())) continue;
        CHECK(chosen_obj >= inst.f.value(s) - p.total(s));
      }
    }
  }
}

TEST_CASE("exact demand refuses huge unstructured supports") {
  Instance inst = gen_random_xos(30, 1, 4);
  CHECK_THROWS_AS(exact_demand(inst.f, PriceVector::uniform(30, 0.0)), UnsupportedQueryError);
  // with a small finite support the same instance is fine
  PriceVector p = PriceVector::infinite(30);
  for (int i = 0; i < 10; ++i) p.p[i] = 0.01;
  CHECK_NOTHROW(exact_demand(inst.f, p));
}

TEST_CASE("approximate demand guarantee against every subset") {
  const double beta = kApproxDemandBeta;

  RewardFunction f = RewardFunction::additive(rats({4, 3, 2}));
  PriceVector p{{1, 1, 3}};
  QueryCounter qc;
  AgentSet s = approx_demand_submodular(f, p, &qc);
  CHECK(qc.approx_demand_queries == 1);
  CHECK(qc.value_queries > 0);
  double got = f.value(s) - p.total(s);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    AgentSet t = mask_set(3, mask);
    CHECK(got >= beta * f.value(t) - p.total(t) - 1e-12);
  }
  // frozen thresholds: against the full set and against {0,1}
  CHECK(got >= beta * 9 - 5 - 1e-12);
  CHECK(got >= beta * 7 - 2 - 1e-12);
}

TEST_CASE("approximate demand with zero prices is plain greedy coverage") {
  Instance inst = gen_random_coverage(10, 31, 30);
  AgentSet s = approx_demand_submodular(inst.f, PriceVector::uniform(10, 0.0));
  CHECK(inst.f.value(s) >=
        (1 - 1 / std::exp(1.0)) * inst.f.value(AgentSet::full(10)) - 1e-12);
  CHECK(approx_demand_submodular(inst.f, PriceVector::infinite(10)) == AgentSet(10));
}

TEST_CASE("approximate demand guarantee exhaustive on submodular corpora") {
  Rng rng(55);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Instance inst =
        seed % 2 ? gen_random_coverage(9, seed, 27) : gen_random_additive(9, seed);
    PriceVector p{std::vector<double>(9)};
    for (double& x : p.p) {
      x = rng.chance(1, 8) ? std::numeric_limits<double>::infinity() : rng.dyadic01(6);
    }
    AgentSet s = approx_demand_submodular(inst.f, p);
    double got = inst.f.value(s) - p.total(s);
    for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
      AgentSet t = mask_set(9, mask);
      if (!t.subset_of(p.finite_support())) continue;
      CHECK(got >= kApproxDemandBeta * inst.f.value(t) - p.total(t) - 1e-12);
    }
  }
}

TEST_CASE("supporting clause: additive and explicit clause lists") {
  RewardFunction add = RewardFunction::additive(rats({2, 1, 1}));
  CHECK(xos_supporting_additive(add, AgentSet::from_members(3, {1})) == rats({2, 1, 1}));

  Instance inst = gen_random_xos(8, 17, 5);
  for (std::uint32_t mask = 0; mask < 256; ++mask) {
    AgentSet s = mask_set(8, mask);
    std::vector<Rat> clause = xos_supporting_additive(inst.f, s);
    Rat at_s = 0;
    s.for_each([&](int i) { at_s += clause[i]; });
    CHECK(at_s == eval_exact(inst.f, s));
    for (std::uint32_t other = 0; other < 256; ++other) {
      AgentSet t = mask_set(8, other);
      Rat at_t = 0;
      t.for_each([&](int i) { at_t += clause[i]; });
      CHECK(at_t <= eval_exact(inst.f, t));
    }
  }
}

TEST_CASE("supporting clause on the clause-witnessed family") {
  Instance inst = xos_lb100();
  AgentSet hidden = *inst.meta.t_star;

  std::vector<Rat> at_hidden = xos_supporting_additive(inst.f, hidden);
  for (int i = 0; i < 100; ++i) {
    CHECK(at_hidden[i] == (hidden.contains(i) ? Rat(5, 100) : Rat(0)));
  }

  std::vector<Rat> at_singleton = xos_supporting_additive(inst.f, AgentSet::from_members(100, {7}));
  CHECK(at_singleton[7] == Rat(1) + Rat(3, 100));
  CHECK(at_singleton[3] == Rat(3, 100));

  // no witness, no clause list
  Instance sub = lb16();
  CHECK_THROWS_AS(xos_supporting_additive(sub.f, AgentSet(16)), UnsupportedQueryError);
}
