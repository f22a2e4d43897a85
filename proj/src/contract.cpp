#include "contracts/contract.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace contracts {

Instance Instance::make(std::vector<Rat> costs, RewardFunction f, InstanceMeta meta) {
  if (static_cast<int>(costs.size()) != f.agents()) {
    throw std::invalid_argument("cost vector length must equal agent count");
  }
  for (const Rat& c : costs) {
    if (c < 0) throw std::invalid_argument("costs must be nonnegative");
  }
  Instance inst{std::move(costs), {}, std::move(f), std::move(meta)};
  inst.costs_d.resize(inst.costs.size());
  for (size_t i = 0; i < inst.costs.size(); ++i) inst.costs_d[i] = to_double(inst.costs[i]);
  return inst;
}

double principal_utility(const Instance& inst, const AgentSet& s, QueryCounter* qc) {
  double f_s = eval(inst.f, s, qc);
  double share_sum = 0;
  bool infeasible = false;
  s.for_each([&](int i) {
    if (inst.costs_d[i] == 0) return;  // zero-cost convention: ratio is 0
    double m = f_s - eval(inst.f, s.without(i), qc);
    if (m <= 0) {
      infeasible = true;
    } else {
      share_sum += inst.costs_d[i] / m;
    }
  });
  if (infeasible) return -std::numeric_limits<double>::infinity();
  return (1.0 - share_sum) * f_s;
}

ExactUtility principal_utility_exact(const Instance& inst, const AgentSet& s) {
  Rat f_s = inst.f.value_exact(s);
  Rat share_sum = 0;
  bool infeasible = false;
  s.for_each([&](int i) {
    if (infeasible || inst.costs[i] == 0) return;
    Rat m = f_s - inst.f.value_exact(s.without(i));
    if (m <= 0) {
      infeasible = true;
    } else {
      share_sum += inst.costs[i] / m;
    }
  });
  if (infeasible) return ExactUtility::neg_inf();
  return ExactUtility::of((Rat(1) - share_sum) * f_s);
}

Contract incentive_alphas(const Instance& inst, const AgentSet& s, QueryCounter* qc) {
  Contract con{std::vector<double>(inst.agents(), 0.0), s, true};
  double f_s = eval(inst.f, s, qc);
  s.for_each([&](int i) {
    if (inst.costs_d[i] == 0) return;
    double m = f_s - eval(inst.f, s.without(i), qc);
    if (m <= 0) {
      con.feasible = false;
      con.alpha[i] = std::numeric_limits<double>::infinity();
    } else {
      con.alpha[i] = inst.costs_d[i] / m;
    }
  });
  return con;
}

ExactContract incentive_alphas_exact(const Instance& inst, const AgentSet& s) {
  ExactContract con{std::vector<Rat>(inst.agents(), Rat(0)), s, true};
  Rat f_s = inst.f.value_exact(s);
  s.for_each([&](int i) {
    if (inst.costs[i] == 0) return;
    Rat m = f_s - inst.f.value_exact(s.without(i));
    if (m <= 0) {
      con.feasible = false;
    } else {
      con.alpha[i] = inst.costs[i] / m;
    }
  });
  return con;
}

namespace {

// lhs >= rhs up to relative tolerance.
bool ge_with_tol(double lhs, double rhs) {
  double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  return lhs >= rhs - kEquilibriumRelTol * scale;
}

}  // namespace

bool is_equilibrium(const Instance& inst, const Contract& con, QueryCounter* qc) {
  if (static_cast<int>(con.alpha.size()) != inst.agents()) {
    throw std::invalid_argument("alpha length must equal agent count");
  }
  const AgentSet& s = con.incentivized;
  double f_s = eval(inst.f, s, qc);
  for (int i = 0; i < inst.agents(); ++i) {
    double a = con.alpha[i];
    if (s.contains(i)) {
      if (std::isinf(a)) return false;
      double f_without = eval(inst.f, s.without(i), qc);
      if (!ge_with_tol(a * f_s - inst.costs_d[i], a * f_without)) return false;
    } else {
      double f_with = eval(inst.f, s.with(i), qc);
      if (!ge_with_tol(a * f_s, a * f_with - inst.costs_d[i])) return false;
    }
  }
  return true;
}

bool is_equilibrium_exact(const Instance& inst, const ExactContract& con) {
  if (static_cast<int>(con.alpha.size()) != inst.agents()) {
    throw std::invalid_argument("alpha length must equal agent count");
  }
  if (!con.feasible) return false;
  const AgentSet& s = con.incentivized;
  Rat f_s = inst.f.value_exact(s);
  for (int i = 0; i < inst.agents(); ++i) {
    const Rat& a = con.alpha[i];
    if (s.contains(i)) {
      if (a * f_s - inst.costs[i] < a * inst.f.value_exact(s.without(i))) return false;
    } else {
      if (a * f_s < a * inst.f.value_exact(s.with(i)) - inst.costs[i]) return false;
    }
  }
  return true;
}

std::pair<AgentSet, double> best_single_agent(const Instance& inst, QueryCounter* qc) {
  AgentSet best(inst.agents());
  double best_g = 0;  // the empty set
  for (int i = 0; i < inst.agents(); ++i) {
    AgentSet s(inst.agents());
    s.add(i);
    double g = principal_utility(inst, s, qc);
    if (g > best_g) {
      best = s;
      best_g = g;
    }
  }
  return {best, best_g};
}

AgentSet cheap_agents(const Instance& inst, QueryCounter* qc) {
  AgentSet a_prime(inst.agents());
  for (int i = 0; i < inst.agents(); ++i) {
    AgentSet s(inst.agents());
    s.add(i);
    double f_i = eval(inst.f, s, qc);
    // c/f <= 1/2 including the 0/0 = 0 convention.
    if (2 * inst.costs_d[i] <= f_i) a_prime.add(i);
  }
  return a_prime;
}

}  // namespace contracts
