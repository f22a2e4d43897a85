// The principal-agent layer: instances, linear contracts, the principal's
// objective g, incentive payments, and equilibrium verification.
//
// Everything here is a pure function over an immutable Instance and is safe
// for concurrent use.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contracts/agent_set.hpp"
#include "contracts/oracles.hpp"
#include "contracts/rational.hpp"
#include "contracts/reward_function.hpp"

namespace contracts {

/// Optional provenance carried by generated instances and their files.
struct InstanceMeta {
  std::string family;
  std::optional<std::uint64_t> seed;
  std::optional<AgentSet> t_star;
  std::string note;
  std::vector<std::string> warnings;

  bool operator==(const InstanceMeta&) const = default;
};

struct Instance {
  std::vector<Rat> costs;
  std::vector<double> costs_d;
  RewardFunction f;
  InstanceMeta meta;

  static Instance make(std::vector<Rat> costs, RewardFunction f, InstanceMeta meta = {});

  int agents() const { return f.agents(); }

  bool operator==(const Instance& o) const {
    return costs == o.costs && f == o.f && meta == o.meta;
  }
};

/// A linear contract: alpha shares plus the set the shares incentivize.
/// alpha[i] == 0 for i outside the set. `feasible` is false when some
/// incentivized agent has positive cost but zero marginal (alpha would be
/// infinite); that is a flag, not an error.
struct Contract {
  std::vector<double> alpha;
  AgentSet incentivized;
  bool feasible = true;
};

struct ExactContract {
  std::vector<Rat> alpha;
  AgentSet incentivized;
  bool feasible = true;
};

/// Extended-real utility on the exact channel; infeasible sets carry -infinity.
struct ExactUtility {
  bool finite = true;
  Rat value;

  static ExactUtility neg_inf() { return {false, Rat(0)}; }
  static ExactUtility of(Rat v) { return {true, std::move(v)}; }

  friend bool operator<(const ExactUtility& a, const ExactUtility& b) {
    if (!a.finite) return b.finite;
    if (!b.finite) return false;
    return a.value < b.value;
  }
  friend bool operator==(const ExactUtility& a, const ExactUtility& b) {
    if (a.finite != b.finite) return false;
    return !a.finite || a.value == b.value;
  }
};

/// g(S) = (1 - sum_{i in S} c_i / f(i | S-{i})) * f(S), with the ratio taken
/// as 0 when c_i = 0, and the whole utility as -infinity when some c_i > 0
/// meets a zero marginal (so unincentivizable sets never beat the empty set).
double principal_utility(const Instance& inst, const AgentSet& s, QueryCounter* qc = nullptr);
ExactUtility principal_utility_exact(const Instance& inst, const AgentSet& s);

/// The cheapest shares incentivizing S: alpha_i = c_i / f(i | S-{i}) on S.
Contract incentive_alphas(const Instance& inst, const AgentSet& s, QueryCounter* qc = nullptr);
ExactContract incentive_alphas_exact(const Instance& inst, const AgentSet& s);

/// Pure Nash check: members prefer exerting, non-members prefer not to.
/// The double overload compares with 1e-9 relative tolerance; the exact
/// overload is tolerance-free.
bool is_equilibrium(const Instance& inst, const Contract& con, QueryCounter* qc = nullptr);
bool is_equilibrium_exact(const Instance& inst, const ExactContract& con);

/// Best of the empty set and all singletons, under the fixed tie order
/// (empty set first, then smallest index).
std::pair<AgentSet, double> best_single_agent(const Instance& inst, QueryCounter* qc = nullptr);

/// Agents whose singleton cost/value ratio is at most 1/2 (0/0 counts as 0).
AgentSet cheap_agents(const Instance& inst, QueryCounter* qc = nullptr);

inline constexpr double kEquilibriumRelTol = 1e-9;

}  // namespace contracts
