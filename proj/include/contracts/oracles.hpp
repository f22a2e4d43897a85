// Oracle primitives over reward functions: value queries, exact demand
// queries, and the value-query-only approximate demand for submodular f.
//
// RewardFunction and PriceVector are immutable and safe to share across
// concurrent solves; a QueryCounter is per-solve state and must not be shared.
#pragma once

#include <limits>
#include <vector>

#include "contracts/agent_set.hpp"
#include "contracts/rational.hpp"
#include "contracts/reward_function.hpp"

namespace contracts {

struct QueryCounter {
  long long value_queries = 0;
  long long demand_queries = 0;
  long long approx_demand_queries = 0;

  void reset() { *this = QueryCounter{}; }
};

/// Per-agent nonnegative prices; +infinity excludes an agent from the ground
/// set of a demand query.
struct PriceVector {
  std::vector<double> p;

  static PriceVector uniform(int n, double price);
  static PriceVector infinite(int n);

  int size() const { return static_cast<int>(p.size()); }
  bool is_finite(int i) const { return p[i] != std::numeric_limits<double>::infinity(); }
  AgentSet finite_support() const;
  double total(const AgentSet& s) const;
};

double eval(const RewardFunction& f, const AgentSet& s, QueryCounter* qc = nullptr);

/// f(S + i) - f(S - i); exactly two value queries.
double marginal(const RewardFunction& f, int i, const AgentSet& s, QueryCounter* qc = nullptr);

Rat eval_exact(const RewardFunction& f, const AgentSet& s);
Rat marginal_exact(const RewardFunction& f, int i, const AgentSet& s);

/// A set maximizing f(S) - p(S) over subsets of the finite-price support.
/// Ties resolve to the smaller cardinality, then the lexicographically
/// smallest member list; the same order is used by every solver and checker.
///
/// Additive and (bumped) symmetric kinds are answered in polynomial time at
/// any n; other kinds enumerate the support and require at most
/// kExhaustiveDemandCap finitely priced agents (UnsupportedQueryError beyond).
AgentSet exact_demand(const RewardFunction& f, const PriceVector& prices,
                      QueryCounter* qc = nullptr);

/// Value-query-only approximate demand for monotone submodular f
/// (distorted greedy): the returned S satisfies
///   f(S) - p(S) >= (1 - 1/e) f(T) - p(T)  for every T,
/// using O(n^2) value queries.
AgentSet approx_demand_submodular(const RewardFunction& f, const PriceVector& prices,
                                  QueryCounter* qc = nullptr);

/// A clause a with a(S) = f(S) and a(T) <= f(T) for all T. Supported for
/// additive f, explicit clause lists, and bumped symmetric functions carrying
/// the clause witness. Throws RepresentationError if no clause attains f(S).
std::vector<Rat> xos_supporting_additive(const RewardFunction& f, const AgentSet& s);

struct UnsupportedQueryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RepresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kExhaustiveDemandCap = 24;
inline constexpr double kApproxDemandBeta = 0.6321205588285577;  // 1 - 1/e

}  // namespace contracts
