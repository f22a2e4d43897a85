#include "contracts/additive.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>
#include <stdexcept>

namespace contracts {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct DpOutcome {
  double surrogate = 0;
  std::vector<int> members;
};

// Exact integer floors of the rounded values, clamped to the grid.
std::vector<long long> grid_weights(const std::vector<int>& agents, const std::vector<Rat>& values,
                                    const Rat& delta_b, long long grid) {
  std::vector<long long> weight(agents.size());
  for (size_t j = 0; j < agents.size(); ++j) {
    BigInt floored = rat_floor(values[agents[j]] / delta_b);
    weight[j] = floored > grid ? grid : floored.convert_to<long long>();
  }
  return weight;
}

struct DpTable {
  std::vector<double> final_row;
  std::vector<std::uint8_t> took;  // rows x cols take decisions
};

// A(j, x) = cheapest share-sum over subsets of the first j agents whose
// rounded value reaches grid level x; ties prefer not taking.
DpTable fill_dp(const std::vector<int>& agents, const std::vector<double>& cost_share,
                const std::vector<long long>& weight, long long grid) {
  int rows = static_cast<int>(agents.size());
  size_t cols = static_cast<size_t>(grid) + 1;
  DpTable dp;
  dp.took.assign(static_cast<size_t>(rows) * cols, 0);
  std::vector<double> prev(cols, kInf), next(cols);
  prev[0] = 0;
  for (int j = 0; j < rows; ++j) {
    double share = cost_share[agents[j]];
    long long w = weight[j];
    for (long long x = 0; x <= grid; ++x) {
      double keep = prev[x];
      double take = prev[std::max<long long>(0, x - w)] + share;
      if (take < keep) {
        next[x] = take;
        dp.took[static_cast<size_t>(j) * cols + x] = 1;
      } else {
        next[x] = keep;
      }
    }
    std::swap(prev, next);
  }
  dp.final_row = std::move(prev);
  return dp;
}

// One guess of b: round values down to multiples of delta*b, run the DP, and
// keep the grid level with the best rounded objective.
DpOutcome solve_guess(const std::vector<int>& agents, const std::vector<Rat>& values,
                      const std::vector<double>& cost_share, const Rat& delta_b, long long grid) {
  int rows = static_cast<int>(agents.size());
  size_t cols = static_cast<size_t>(grid) + 1;
  std::vector<long long> weight = grid_weights(agents, values, delta_b, grid);
  DpTable dp = fill_dp(agents, cost_share, weight, grid);
  const std::vector<double>& prev = dp.final_row;
  const std::vector<std::uint8_t>& took = dp.took;

  // Score every reachable grid level with the rounded objective
  // (1 - share-sum) * x and keep the best level of this guess.
  double delta_b_d = to_double(delta_b);
  long long best_x = 0;
  double best_surrogate = 0;
  for (long long x = 0; x <= grid; ++x) {
    if (prev[x] == kInf) continue;
    double surrogate = (1.0 - prev[x]) * (static_cast<double>(x) * delta_b_d);
    if (surrogate > best_surrogate) {
      best_surrogate = surrogate;
      best_x = x;
    }
  }

  DpOutcome out;
  out.surrogate = best_surrogate;
  long long x = best_x;
  for (int j = rows - 1; j >= 0; --j) {
    if (took[static_cast<size_t>(j) * cols + x]) {
      out.members.push_back(agents[j]);
      x = std::max<long long>(0, x - weight[j]);
    }
  }
  return out;
}

}  // namespace

namespace detail {

std::vector<double> fptas_cheapest_share_row(const std::vector<int>& agents,
                                             const std::vector<Rat>& values,
                                             const std::vector<double>& cost_share,
                                             const Rat& delta_b, long long grid) {
  std::vector<long long> weight = grid_weights(agents, values, delta_b, grid);
  return fill_dp(agents, cost_share, weight, grid).final_row;
}

}  // namespace detail

SolveReport fptas_additive(const Instance& inst, double epsilon, QueryCounter* qc) {
  auto start = std::chrono::steady_clock::now();
  if (inst.f.kind() != RewardKind::kAdditive) {
    throw std::invalid_argument("fptas requires additive reward");
  }
  if (!(epsilon > 0) || !(epsilon < 1)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  QueryCounter local;
  QueryCounter* counter = qc ? qc : &local;

  int n = inst.agents();
  const std::vector<Rat>& values = inst.f.additive_data()->values;

  // Zero-value agents never help: with positive cost they are infeasible to
  // incentivize, with zero cost they leave g unchanged.
  std::vector<int> agents;
  std::vector<double> cost_share(n, 0);
  for (int i = 0; i < n; ++i) {
    AgentSet s(n);
    s.add(i);
    double v = eval(inst.f, s, counter);
    if (values[i] > 0) {
      agents.push_back(i);
      cost_share[i] = inst.costs_d[i] / v;
    }
  }

  AgentSet chosen(n);
  if (!agents.empty()) {
    Rat eps = rat_from_double(epsilon);
    Rat delta = eps / n;
    BigInt grid_big = rat_ceil(Rat(n) / delta);
    if (grid_big > kFptasMaxGridCells / static_cast<long long>(agents.size() + 1)) {
      throw std::invalid_argument("epsilon too small for the dynamic-programming grid");
    }
    long long grid = grid_big.convert_to<long long>();

    std::set<Rat> seen;
    double best_surrogate = -1;
    for (int i : agents) {
      if (!seen.insert(values[i]).second) continue;  // identical guess, identical table
      Rat delta_b = delta * values[i];
      DpOutcome out = solve_guess(agents, values, cost_share, delta_b, grid);
      if (out.surrogate > best_surrogate) {
        best_surrogate = out.surrogate;
        chosen = AgentSet::from_members(n, out.members);
      }
    }
  }

  SolveReport rep = finish_report("fptas", inst, chosen, *counter);
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

Instance partition_instance(const std::vector<long long>& weights) {
  if (weights.empty()) throw std::invalid_argument("partition needs at least one weight");
  long long total = 0;
  for (long long w : weights) {
    if (w <= 0) throw std::invalid_argument("partition weights must be positive");
    total += w;
  }
  std::vector<Rat> values, costs;
  values.reserve(weights.size());
  costs.reserve(weights.size());
  for (long long w : weights) {
    values.emplace_back(w);
    costs.push_back(Rat(w) * w / total);
  }
  InstanceMeta meta;
  meta.family = "partition";
  meta.note = "yes-instance of PARTITION iff the optimal principal utility equals W/4 = " +
              format_fraction(Rat(total, 4));
  return Instance::make(std::move(costs), RewardFunction::additive(std::move(values)),
                        std::move(meta));
}

}  // namespace contracts
