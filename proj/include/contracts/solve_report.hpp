#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contracts/agent_set.hpp"
#include "contracts/contract.hpp"
#include "contracts/oracles.hpp"

namespace contracts {

/// One grid step of the estimate-driven solvers.
struct CandidateRecord {
  int grid_index = 0;
  double x_j = 0;       // the estimate fed to the subroutine
  int demand_size = 0;  // |T| returned by the demand stage
  int chosen_size = 0;  // |U| after scaling
  double g_value = 0;   // g(U)
};

struct SolveReport {
  std::string algorithm;
  AgentSet chosen;
  std::vector<double> alpha;
  double g = 0;
  std::vector<CandidateRecord> candidates;
  QueryCounter queries;
  std::optional<double> g_opt;  // brute-force optimum, when it was computed
  std::optional<double> ratio;  // g / g_opt, when g_opt > 0
  double wall_ms = 0;
};

/// Finalizes a report from a solved set: recomputes g from the contract
/// itself (not from any solver-internal value) and verifies the contract is
/// an equilibrium. Throws std::logic_error if it is not.
SolveReport finish_report(std::string algorithm, const Instance& inst, const AgentSet& chosen,
                          QueryCounter queries, std::vector<CandidateRecord> candidates = {});

}  // namespace contracts
