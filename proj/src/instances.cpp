#include "contracts/instances.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "contracts/rng.hpp"

namespace contracts {

namespace {

int exact_sqrt(int n) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

AgentSet pick_hidden_set(int n, std::optional<AgentSet> given, std::uint64_t seed) {
  int want = n / 2 + 1;
  if (given) {
    if (given->universe() != n || given->size() != want) {
      throw std::invalid_argument("hidden set must have n/2 + 1 members");
    }
    return *std::move(given);
  }
  Rng rng(seed);
  return rng.subset_of_size(n, want);
}

}  // namespace

Instance gen_subadditive_lb(int n, std::optional<AgentSet> t_star, std::uint64_t seed) {
  int root = n >= 2 ? exact_sqrt(n) : -1;
  if (n < 2 || n % 2 != 0 || root < 0) {
    throw std::invalid_argument("family requires an even perfect-square n");
  }
  AgentSet hidden = pick_hidden_set(n, std::move(t_star), seed);

  std::vector<Rat> by_card(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      by_card[k] = 0;
    } else if (k <= n / 2) {
      by_card[k] = Rat(3) + Rat(2 * k, root);
    } else if (k == n / 2 + 1) {
      by_card[k] = Rat(4 + root);
    } else if (k == n / 2 + 2) {
      by_card[k] = Rat(5 + root);
    } else {
      by_card[k] = Rat(6 + root);
    }
  }

  InstanceMeta meta;
  meta.family = "subadditive-lb";
  meta.seed = seed;
  meta.t_star = hidden;
  if (n <= 4096) {
    meta.warnings.push_back("query-hardness constants assume n > 4096; structure holds at any n");
  }
  return Instance::make(std::vector<Rat>(n, Rat(2, n)),
                        RewardFunction::bumped_symmetric(std::move(by_card), hidden, Rat(1)),
                        std::move(meta));
}

Instance gen_xos_lb(int n, std::optional<AgentSet> t_star, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("family requires even n");
  AgentSet hidden = pick_hidden_set(n, std::move(t_star), seed);

  std::vector<Rat> by_card(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      by_card[k] = 0;
    } else if (k <= n / 2) {
      by_card[k] = Rat(1) + Rat(3 * k, n);
    } else {
      by_card[k] = Rat(1, 2) + Rat(4 * k, n);
    }
  }

  InstanceMeta meta;
  meta.family = "xos-lb";
  meta.seed = seed;
  meta.t_star = hidden;
  if (n < 58) {
    meta.warnings.push_back(
        "the 11/10 cap on non-hidden sets holds for n >= 58; reported maxima are exact");
  }
  return Instance::make(
      std::vector<Rat>(n, Rat(5, static_cast<long long>(n) * (n + 2))),
      RewardFunction::bumped_symmetric(std::move(by_card), hidden, Rat(1, n),
                                       /*has_bump_support_clauses=*/true),
      std::move(meta));
}

namespace {

std::vector<Rat> draw_costs(Rng& rng, const RewardFunction& f) {
  std::vector<Rat> costs(f.agents());
  for (int i = 0; i < f.agents(); ++i) {
    Rat value = f.singleton_value_exact(i);
    costs[i] = value == 0 ? Rat(0) : Rat(value * rat_from_double(rng.dyadic01_open()));
  }
  return costs;
}

InstanceMeta random_meta(const char* family, std::uint64_t seed) {
  InstanceMeta meta;
  meta.family = family;
  meta.seed = seed;
  return meta;
}

}  // namespace

Instance gen_random_additive(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one agent");
  Rng rng(seed);
  std::vector<Rat> values(n);
  for (Rat& v : values) v = rat_from_double(rng.dyadic01_open());
  RewardFunction f = RewardFunction::additive(std::move(values));
  std::vector<Rat> costs = draw_costs(rng, f);
  return Instance::make(std::move(costs), std::move(f), random_meta("random-additive", seed));
}

Instance gen_random_coverage(int n, std::uint64_t seed, int universe_m) {
  if (n < 1) throw std::invalid_argument("need at least one agent");
  if (universe_m < 1) throw std::invalid_argument("coverage universe must be nonempty");
  Rng rng(seed);
  std::vector<Rat> weights(universe_m);
  for (Rat& w : weights) w = rat_from_double(rng.dyadic01_open());
  std::vector<std::vector<int>> cover(n);
  for (int a = 0; a < n; ++a) {
    for (int e = 0; e < universe_m; ++e) {
      if (rng.chance(1, 4)) cover[a].push_back(e);
    }
  }
  RewardFunction f = RewardFunction::coverage(n, universe_m, std::move(weights), cover);
  std::vector<Rat> costs = draw_costs(rng, f);
  return Instance::make(std::move(costs), std::move(f), random_meta("random-coverage", seed));
}

Instance gen_random_xos(int n, std::uint64_t seed, int clause_count) {
  if (n < 1) throw std::invalid_argument("need at least one agent");
  if (clause_count < 1) throw std::invalid_argument("need at least one clause");
  Rng rng(seed);
  std::vector<std::vector<Rat>> clauses(clause_count, std::vector<Rat>(n));
  for (auto& clause : clauses) {
    for (Rat& w : clause) {
      w = rng.chance(1, 4) ? Rat(0) : rat_from_double(rng.dyadic01_open());
    }
  }
  RewardFunction f = RewardFunction::xos(n, std::move(clauses));
  std::vector<Rat> costs = draw_costs(rng, f);
  return Instance::make(std::move(costs), std::move(f), random_meta("random-xos", seed));
}

}  // namespace contracts
