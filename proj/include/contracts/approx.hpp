// The constant-factor approximation pipeline for XOS and submodular rewards:
// marginal-preserving scaling, the estimate-driven subroutine, and the main
// grid loops over guesses of f(S* intersect A').
#pragma once

#include "contracts/contract.hpp"
#include "contracts/oracles.hpp"
#include "contracts/solve_report.hpp"

namespace contracts {

struct ScalingParams {
  double psi = 0;    // target level, 0 <= psi < f(T)
  double delta = 1;  // marginal retention factor in (0, 1]
};

struct EstimateParams {
  double y_tilde = 0;   // estimate of f(S* intersect A')
  AgentSet a_prime;     // the cheap agents
  PriceVector prices;   // beta/2 * sqrt(c_i * y_tilde) on A', +infinity elsewhere
};

struct MainParams {
  double xi = 1.01;  // grid ratio, > 1
  double beta = 0;   // demand quality; 0 means "per algorithm default"
};

/// Scales T down to a subset U with
///   (1 - delta) * psi <= f(U) <= psi + max_{i in T} f({i})
/// and f(i | U-{i}) >= delta * f(i | T-{i}) for every i in U.
///
/// Values come from the double-channel oracle; every comparison that involves
/// arithmetic on those values (marginal ratios, the (1-delta) threshold) is
/// done in exact rationals reconstructed from the reported doubles, so the
/// selection is never perturbed by rounding.
///
/// Requires monotone XOS (or submodular) f. Throws std::invalid_argument when
/// psi is out of range.
AgentSet scale_set(const RewardFunction& f, const AgentSet& t, const ScalingParams& params,
                   QueryCounter* qc = nullptr);

EstimateParams make_estimate_params(const Instance& inst, double y_tilde, double beta,
                                    QueryCounter* qc = nullptr);

struct EstimateTrace {
  double psi = 0;
  int demand_size = 0;   // |T| after the demand stage (and pruning, if any)
  bool scaled = false;   // whether the scaling stage ran
};

/// One estimate-driven attempt: prices from y_tilde, a demand query (exact for
/// beta = 1, the value-query approximate demand plus a pruning pass for
/// beta < 1), then scaling to psi = beta^2 * y_tilde / 32 - max_{A'} f({i}).
/// When y_tilde <= f(S* intersect A') the returned U satisfies
///   g(U) >= max(beta^2 * y_tilde / 128 - max_{A'} f({i}) / 4, 0).
AgentSet contract_from_estimate(const Instance& inst, const EstimateParams& params, double beta,
                                QueryCounter* qc = nullptr, EstimateTrace* trace = nullptr);

/// Main loop with exact demand queries (beta = 1). For XOS f the result is a
/// 1/(256 xi + 2) approximation of the optimal contract.
SolveReport approx_contract_xos(const Instance& inst, const MainParams& params = {});

/// Value-query-only variant: approximate demand with beta = 1 - 1/e and the
/// pruning pass. For monotone submodular f the result is a
/// beta^2/(256 xi + 2 beta^2) approximation.
SolveReport approx_contract_submodular(const Instance& inst, const MainParams& params = {});

/// Number of grid steps: ceil(log_xi(2n)), clamped to cover 2n.
int estimate_grid_steps(int n, double xi);

}  // namespace contracts
