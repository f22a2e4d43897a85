// Shared helpers for the test suite: compact instance builders and
// independent oracles (kept separate from the library code they check).
#pragma once

#include <cmath>
#include <vector>

#include "contracts/contract.hpp"
#include "contracts/oracles.hpp"
#include "contracts/verify.hpp"

namespace contracts::test {

inline std::vector<Rat> rats(std::initializer_list<double> xs) {
  std::vector<Rat> out;
  for (double x : xs) out.push_back(rat_from_double(x));
  return out;
}

inline Instance additive_instance(std::initializer_list<double> values,
                                  std::initializer_list<double> costs) {
  return Instance::make(rats(costs), RewardFunction::additive(rats(values)));
}

// The running 3-agent example with exact rational costs {1, 1/5, 1/5}.
inline Instance example3() {
  return Instance::make({Rat(1), Rat(1, 5), Rat(1, 5)},
                        RewardFunction::additive({Rat(2), Rat(1), Rat(1)}));
}

inline Instance uniform_additive(int n, double value, double cost) {
  return Instance::make(std::vector<Rat>(n, rat_from_double(cost)),
                        RewardFunction::additive(std::vector<Rat>(n, rat_from_double(value))));
}

// f({0,1}) = 3, f({0}) = f({1}) = 1: violates subadditivity and the
// marginal-sum bound; the checker negative control.
inline RewardFunction supermodular_pair() {
  return RewardFunction::table(2, {Rat(0), Rat(1), Rat(1), Rat(3)});
}

// Weighted union value computed element by element, independent of the
// block-OR evaluation in the library.
inline Rat naive_coverage_value(const CoverageData& d, const AgentSet& s) {
  Rat sum = 0;
  for (int e = 0; e < d.universe; ++e) {
    bool covered = false;
    s.for_each([&](int a) {
      if (d.cover[a][e / 64] >> (e % 64) & 1) covered = true;
    });
    if (covered) sum += d.weights[e];
  }
  return sum;
}

// Direct argmax of g by enumeration through the public eval interface only;
// independent of the table-based brute force in verify.
inline std::pair<AgentSet, ExactUtility> naive_optimum(const Instance& inst) {
  int n = inst.agents();
  AgentSet best(n);
  ExactUtility best_g = principal_utility_exact(inst, best);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    AgentSet s(n);
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) s.add(i);
    }
    ExactUtility g = principal_utility_exact(inst, s);
    if (best_g < g || (best_g == g && AgentSet::tie_less(s, best))) {
      best = s;
      best_g = g;
    }
  }
  return {best, best_g};
}

inline AgentSet mask_set(int n, std::uint32_t mask) { return AgentSet::from_mask(n, mask); }

}  // namespace contracts::test
