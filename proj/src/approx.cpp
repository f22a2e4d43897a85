#include "contracts/approx.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "contracts/solve_report.hpp"

namespace contracts {

namespace {

double eval_singleton(const RewardFunction& f, int i, QueryCounter* qc) {
  AgentSet s(f.agents());
  s.add(i);
  return eval(f, s, qc);
}

}  // namespace

AgentSet scale_set(const RewardFunction& f, const AgentSet& t, const ScalingParams& params,
                   QueryCounter* qc) {
  if (!(params.delta > 0) || params.delta > 1) {
    throw std::invalid_argument("scaling delta must lie in (0, 1]");
  }
  if (params.psi < 0) throw std::invalid_argument("scaling psi must be nonnegative");
  double f_t = eval(f, t, qc);
  if (!(params.psi < f_t)) {
    throw std::invalid_argument("scaling requires psi < f(T)");
  }

  // Inclusion-minimal core: drop agents in ascending index, restarting after
  // each successful removal, until a full pass removes nothing.
  AgentSet core = t;
  bool removed = true;
  while (removed) {
    removed = false;
    for (int i : core.members()) {
      if (eval(f, core.without(i), qc) == f_t) {
        core.remove(i);
        removed = true;
        break;
      }
    }
  }

  int m = core.size();
  // Baseline marginals f(i | core-{i}); strictly positive by minimality.
  std::vector<double> base_marginal(f.agents(), 0);
  core.for_each([&](int i) {
    base_marginal[i] = f_t - eval(f, core.without(i), qc);
    if (!(base_marginal[i] > 0)) {
      throw std::logic_error("minimal core produced a zero marginal");
    }
  });

  // Peel one agent per step, always the one whose marginal has decayed the
  // most relative to its baseline (ties to the smallest index). Ratios are
  // compared in exact rationals built from the reported values, so rounding
  // never flips a selection.
  std::vector<AgentSet> chain;
  std::vector<double> chain_value;
  std::vector<Rat> decay;  // decay[t] for step t >= 1
  chain.reserve(m + 1);
  chain.push_back(core);
  chain_value.push_back(f_t);
  decay.push_back(Rat(0));  // unused slot 0

  AgentSet current = core;
  double current_value = f_t;
  for (int step = 1; step <= m; ++step) {
    int pick = -1;
    double pick_value_after = 0;
    Rat pick_ratio;
    for (int i : current.members()) {
      double after = eval(f, current.without(i), qc);
      Rat ratio = rat_from_double(current_value - after) / rat_from_double(base_marginal[i]);
      if (pick < 0 || ratio < pick_ratio) {
        pick = i;
        pick_ratio = ratio;
        pick_value_after = after;
      }
    }
    current.remove(pick);
    current_value = pick_value_after;
    chain.push_back(current);
    chain_value.push_back(current_value);
    decay.push_back(pick_ratio);
  }

  // First index where the value drops to psi or below; exists because the
  // chain ends at the empty set.
  int j = 0;
  while (chain_value[j] > params.psi) ++j;

  // First index at or below (1 - delta) of the value just above psi.
  Rat keep_threshold =
      (Rat(1) - rat_from_double(params.delta)) * rat_from_double(chain_value[j - 1]);
  int k = j;
  while (rat_from_double(chain_value[k]) > keep_threshold) ++k;

  int best_t = j;
  for (int step = j + 1; step <= k; ++step) {
    if (decay[best_t] < decay[step]) best_t = step;
  }
  return chain[best_t - 1];
}

EstimateParams make_estimate_params(const Instance& inst, double y_tilde, double beta,
                                    QueryCounter* qc) {
  if (y_tilde < 0) throw std::invalid_argument("estimate must be nonnegative");
  if (!(beta > 0) || beta > 1) throw std::invalid_argument("beta must lie in (0, 1]");
  EstimateParams params;
  params.y_tilde = y_tilde;
  params.a_prime = cheap_agents(inst, qc);
  params.prices = PriceVector::infinite(inst.agents());
  params.a_prime.for_each([&](int i) {
    params.prices.p[i] = 0.5 * beta * std::sqrt(inst.costs_d[i] * y_tilde);
  });
  return params;
}

AgentSet contract_from_estimate(const Instance& inst, const EstimateParams& params, double beta,
                                QueryCounter* qc, EstimateTrace* trace) {
  if (!(beta > 0) || beta > 1) throw std::invalid_argument("beta must lie in (0, 1]");
  const RewardFunction& f = inst.f;

  double max_single = 0;
  params.a_prime.for_each(
      [&](int i) { max_single = std::max(max_single, eval_singleton(f, i, qc)); });
  double psi = beta * beta * params.y_tilde / 32.0 - max_single;
  if (trace) trace->psi = psi;

  AgentSet demand(inst.agents());
  if (beta == 1.0) {
    demand = exact_demand(f, params.prices, qc);
  } else {
    demand = approx_demand_submodular(f, params.prices, qc);
    // Pruning pass: repeatedly drop any member priced above its marginal.
    bool dropped = true;
    while (dropped) {
      dropped = false;
      for (int i : demand.members()) {
        if (marginal(f, i, demand, qc) < params.prices.p[i]) {
          demand.remove(i);
          dropped = true;
          break;
        }
      }
    }
  }
  if (trace) trace->demand_size = demand.size();

  double f_demand = eval(f, demand, qc);
  if (0 < psi && psi < f_demand) {
    if (trace) trace->scaled = true;
    return scale_set(f, demand, {psi, 0.5}, qc);
  }
  return AgentSet(inst.agents());
}

int estimate_grid_steps(int n, double xi) {
  if (!(xi > 1)) throw std::invalid_argument("grid ratio xi must exceed 1");
  double target = 2.0 * n;
  int steps = static_cast<int>(std::ceil(std::log(target) / std::log(xi)));
  if (steps < 0) steps = 0;
  while (std::pow(xi, steps) < target) ++steps;
  return steps;
}

SolveReport finish_report(std::string algorithm, const Instance& inst, const AgentSet& chosen,
                          QueryCounter queries, std::vector<CandidateRecord> candidates) {
  SolveReport rep;
  rep.algorithm = std::move(algorithm);
  rep.chosen = chosen;
  rep.candidates = std::move(candidates);
  Contract con = incentive_alphas(inst, chosen, &queries);
  if (!con.feasible) {
    throw std::logic_error("solver selected a set that cannot be incentivized");
  }
  if (!is_equilibrium(inst, con, &queries)) {
    throw std::logic_error("emitted contract fails the equilibrium check");
  }
  rep.alpha = std::move(con.alpha);
  double share_sum = 0;
  chosen.for_each([&](int i) { share_sum += rep.alpha[i]; });
  rep.g = (1.0 - share_sum) * eval(inst.f, chosen, &queries);
  rep.queries = queries;
  return rep;
}

namespace {

SolveReport run_grid_pipeline(const Instance& inst, double xi, double beta,
                              const char* algorithm) {
  auto start = std::chrono::steady_clock::now();
  QueryCounter qc;
  int n = inst.agents();

  // Candidate pool in generation order: empty set, singletons, grid outputs.
  // Ties in the final argmax go to the earliest candidate.
  std::vector<AgentSet> pool;
  std::vector<CandidateRecord> records;
  pool.emplace_back(n);
  for (int i = 0; i < n; ++i) {
    AgentSet s(n);
    s.add(i);
    pool.push_back(s);
  }

  AgentSet a_prime = cheap_agents(inst, &qc);
  double max_single = 0;
  a_prime.for_each(
      [&](int i) { max_single = std::max(max_single, eval_singleton(inst.f, i, &qc)); });

  if (!a_prime.empty() && max_single > 0) {
    double x = max_single / 2.0;
    int steps = estimate_grid_steps(n, xi);
    EstimateParams params;
    params.a_prime = a_prime;
    for (int j = 0; j <= steps; ++j) {
      double x_j = x * std::pow(xi, j);
      params.y_tilde = x_j;
      params.prices = PriceVector::infinite(n);
      a_prime.for_each([&](int i) {
        params.prices.p[i] = 0.5 * beta * std::sqrt(inst.costs_d[i] * x_j);
      });
      EstimateTrace trace;
      AgentSet u = contract_from_estimate(inst, params, beta, &qc, &trace);
      CandidateRecord rec;
      rec.grid_index = j;
      rec.x_j = x_j;
      rec.demand_size = trace.demand_size;
      rec.chosen_size = u.size();
      records.push_back(rec);
      pool.push_back(std::move(u));
    }
  }

  // Exact argmax over the pool. Instance data are rational, so candidate
  // comparisons are tolerance-free; the earliest maximizer wins.
  size_t best = 0;
  ExactUtility best_g = ExactUtility::neg_inf();
  std::vector<double> pool_g(pool.size(), 0);
  for (size_t idx = 0; idx < pool.size(); ++idx) {
    ExactUtility g = principal_utility_exact(inst, pool[idx]);
    pool_g[idx] = g.finite ? to_double(g.value) : -std::numeric_limits<double>::infinity();
    if (best_g < g) {
      best = idx;
      best_g = g;
    }
  }
  size_t grid_base = pool.size() - records.size();
  for (size_t r = 0; r < records.size(); ++r) records[r].g_value = pool_g[grid_base + r];

  SolveReport rep = finish_report(algorithm, inst, pool[best], qc, std::move(records));
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

}  // namespace

SolveReport approx_contract_xos(const Instance& inst, const MainParams& params) {
  double beta = params.beta == 0 ? 1.0 : params.beta;
  if (beta != 1.0) {
    throw std::invalid_argument("the exact-demand pipeline requires beta = 1");
  }
  return run_grid_pipeline(inst, params.xi, 1.0, "xos");
}

SolveReport approx_contract_submodular(const Instance& inst, const MainParams& params) {
  double beta = params.beta == 0 ? kApproxDemandBeta : params.beta;
  if (!(beta > 0) || beta >= 1) {
    throw std::invalid_argument("the value-query pipeline requires beta in (0, 1)");
  }
  return run_grid_pipeline(inst, params.xi, beta, "submod");
}

}  // namespace contracts
