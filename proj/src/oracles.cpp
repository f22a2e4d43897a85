#include "contracts/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace contracts {

PriceVector PriceVector::uniform(int n, double price) {
  return PriceVector{std::vector<double>(n, price)};
}

PriceVector PriceVector::infinite(int n) {
  return uniform(n, std::numeric_limits<double>::infinity());
}

AgentSet PriceVector::finite_support() const {
  AgentSet s(size());
  for (int i = 0; i < size(); ++i) {
    if (is_finite(i)) s.add(i);
  }
  return s;
}

double PriceVector::total(const AgentSet& s) const {
  double sum = 0;
  s.for_each([&](int i) { sum += p[i]; });
  return sum;
}

double eval(const RewardFunction& f, const AgentSet& s, QueryCounter* qc) {
  if (qc) ++qc->value_queries;
  return f.value(s);
}

double marginal(const RewardFunction& f, int i, const AgentSet& s, QueryCounter* qc) {
  return eval(f, s.with(i), qc) - eval(f, s.without(i), qc);
}

Rat eval_exact(const RewardFunction& f, const AgentSet& s) { return f.value_exact(s); }

Rat marginal_exact(const RewardFunction& f, int i, const AgentSet& s) {
  return f.value_exact(s.with(i)) - f.value_exact(s.without(i));
}

namespace {

void check_prices(const RewardFunction& f, const PriceVector& prices) {
  if (prices.size() != f.agents()) {
    throw std::invalid_argument("price vector length must equal agent count");
  }
  for (int i = 0; i < prices.size(); ++i) {
    if (std::isnan(prices.p[i]) || prices.p[i] < 0) {
      throw std::invalid_argument("prices must be nonnegative or +infinity");
    }
  }
}

struct DemandBest {
  double objective = 0;
  AgentSet set;

  explicit DemandBest(int n) : set(n) {}

  // Strictly better under (objective desc, cardinality asc, lex asc).
  bool improves(double obj, const AgentSet& s) const {
    if (obj != objective) return obj > objective;
    return AgentSet::tie_less(s, set);
  }

  void consider(double obj, const AgentSet& s) {
    if (improves(obj, s)) {
      objective = obj;
      set = s;
    }
  }
};

// Demand for additive f: take exactly the agents whose value strictly beats
// their price. Agents with v == p add nothing and are dropped, which realizes
// the smaller-cardinality tie rule; the result is also lex-minimal among the
// maximizers because the included set is forced.
AgentSet demand_additive(const AdditiveData& d, const PriceVector& prices) {
  AgentSet s(static_cast<int>(d.values_d.size()));
  for (int i = 0; i < static_cast<int>(d.values_d.size()); ++i) {
    if (prices.is_finite(i) && d.values_d[i] > prices.p[i]) s.add(i);
  }
  return s;
}

// Demand for cardinality-based kinds at any n: among size-k subsets of the
// finite support, f is constant (except possibly on the bump set), so the
// best size-k candidate is the k cheapest agents under the (price, index)
// order -- which is also the lex-smallest among the minimum-price ties.
// The bump set is compared explicitly as one extra candidate.
AgentSet demand_symmetric(const RewardFunction& f, const PriceVector& prices) {
  int n = f.agents();
  std::vector<int> support;
  support.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (prices.is_finite(i)) support.push_back(i);
  }
  std::sort(support.begin(), support.end(), [&](int a, int b) {
    if (prices.p[a] != prices.p[b]) return prices.p[a] < prices.p[b];
    return a < b;
  });

  const SymmetricData* base = f.symmetric_data();
  const BumpedData* bumped = f.bumped_data();
  const std::vector<double>& by_card = bumped ? bumped->base.by_card_d : base->by_card_d;

  DemandBest best(n);
  AgentSet prefix(n);
  double prefix_price = 0;
  best.consider(0, prefix);  // k = 0
  for (size_t k = 1; k <= support.size(); ++k) {
    prefix.add(support[k - 1]);
    prefix_price += prices.p[support[k - 1]];
    double v = by_card[k];
    if (bumped && prefix == bumped->bump_set) v += bumped->bump_d;
    best.consider(v - prefix_price, prefix);
  }
  if (bumped && bumped->bump_set.subset_of(prices.finite_support())) {
    const AgentSet& t = bumped->bump_set;
    best.consider(by_card[t.size()] + bumped->bump_d - prices.total(t), t);
  }
  return best.set;
}

// Exhaustive demand over the finite support, visiting subsets in Gray-code
// order so each step flips one agent and updates running state in O(kind).
// Tie order on equal objectives: cardinality, then lexicographic member list
// (for equal cardinalities the lex-smaller mask owns the lowest differing bit).
struct ExhaustiveBest {
  double objective = 0;
  std::uint32_t mask = 0;
  int card = 0;

  void consider(double obj, std::uint32_t m, int c) {
    bool better;
    if (obj != objective) {
      better = obj > objective;
    } else if (c != card) {
      better = c < card;
    } else {
      std::uint32_t diff = m ^ mask;
      better = diff != 0 && (m & (diff & (~diff + 1)));
    }
    if (better) {
      objective = obj;
      mask = m;
      card = c;
    }
  }
};

template <typename FlipFn, typename ValueFn>
std::uint32_t gray_scan(int s, const std::vector<double>& price_of, FlipFn&& flip,
                        ValueFn&& value) {
  ExhaustiveBest best;  // the empty set, objective 0
  std::uint32_t mask = 0;
  double price_sum = 0;
  int card = 0;
  const std::uint32_t total = std::uint32_t{1} << s;
  for (std::uint32_t i = 1; i < total; ++i) {
    int bit = std::countr_zero(i);
    bool inserting = !(mask >> bit & 1);
    mask ^= std::uint32_t{1} << bit;
    card += inserting ? 1 : -1;
    price_sum += inserting ? price_of[bit] : -price_of[bit];
    flip(bit, inserting);
    best.consider(value() - price_sum, mask, card);
  }
  return best.mask;
}

AgentSet demand_exhaustive(const RewardFunction& f, const PriceVector& prices) {
  int n = f.agents();
  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    if (prices.is_finite(i)) support.push_back(i);
  }
  int s = static_cast<int>(support.size());
  if (s > kExhaustiveDemandCap) {
    throw UnsupportedQueryError("demand support too large for exhaustive search (" +
                                std::to_string(s) + " > " +
                                std::to_string(kExhaustiveDemandCap) + " agents)");
  }
  std::vector<double> price_of(s);
  for (int j = 0; j < s; ++j) price_of[j] = prices.p[support[j]];

  std::uint32_t best_mask = 0;
  switch (f.kind()) {
    case RewardKind::kXosClauses: {
      const XosData& d = *f.xos_data();
      std::vector<double> clause_sum(d.clauses_d.size(), 0);
      best_mask = gray_scan(
          s, price_of,
          [&](int bit, bool inserting) {
            int agent = support[bit];
            for (size_t c = 0; c < clause_sum.size(); ++c) {
              clause_sum[c] += inserting ? d.clauses_d[c][agent] : -d.clauses_d[c][agent];
            }
          },
          [&] {
            double m = 0;
            for (double v : clause_sum) m = std::max(m, v);
            return m;
          });
      break;
    }
    case RewardKind::kCoverage: {
      const CoverageData& d = *f.coverage_data();
      std::vector<int> count(d.universe, 0);
      double covered = 0;
      best_mask = gray_scan(
          s, price_of,
          [&](int bit, bool inserting) {
            int agent = support[bit];
            const auto& words = d.cover[agent];
            for (size_t w = 0; w < words.size(); ++w) {
              std::uint64_t bits = words[w];
              while (bits) {
                int e = static_cast<int>(w * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                if (inserting) {
                  if (count[e]++ == 0) covered += d.weights_d[e];
                } else {
                  if (--count[e] == 0) covered -= d.weights_d[e];
                }
              }
            }
          },
          [&] { return covered; });
      break;
    }
    default: {
      // Fallback for table and any other finitely enumerable kind.
      AgentSet current(n);
      double fv = f.value(current);
      best_mask = gray_scan(
          s, price_of,
          [&](int bit, bool inserting) {
            int agent = support[bit];
            if (inserting) {
              current.add(agent);
            } else {
              current.remove(agent);
            }
            fv = f.value(current);
          },
          [&] { return fv; });
      break;
    }
  }

  AgentSet out(n);
  for (int j = 0; j < s; ++j) {
    if (best_mask >> j & 1) out.add(support[j]);
  }
  return out;
}

}  // namespace

AgentSet exact_demand(const RewardFunction& f, const PriceVector& prices, QueryCounter* qc) {
  check_prices(f, prices);
  if (qc) ++qc->demand_queries;
  switch (f.kind()) {
    case RewardKind::kAdditive:
      return demand_additive(*f.additive_data(), prices);
    case RewardKind::kSymmetricTable:
    case RewardKind::kBumpedSymmetric:
      return demand_symmetric(f, prices);
    default:
      return demand_exhaustive(f, prices);
  }
}

AgentSet approx_demand_submodular(const RewardFunction& f, const PriceVector& prices,
                                  QueryCounter* qc) {
  check_prices(f, prices);
  if (qc) ++qc->approx_demand_queries;
  int n = f.agents();
  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    if (prices.is_finite(i)) support.push_back(i);
  }
  int k = static_cast<int>(support.size());
  AgentSet chosen(n);
  if (k == 0) return chosen;

  double f_chosen = eval(f, chosen, qc);
  std::vector<bool> in(n, false);
  // Distorted greedy for f(S) - p(S): at step t the candidate gain is
  // (1 - 1/k)^(k-t-1) * marginal - price, and an element is added only when
  // that distorted gain is strictly positive. The final set satisfies
  // f(S) - p(S) >= (1 - (1-1/k)^k) f(T) - p(T) >= (1-1/e) f(T) - p(T) for
  // every T over the support.
  for (int t = 0; t < k; ++t) {
    double factor = std::pow(1.0 - 1.0 / k, static_cast<double>(k - t - 1));
    int best_agent = -1;
    double best_gain = 0, best_value = 0;
    for (int agent : support) {
      if (in[agent]) continue;
      double fe = eval(f, chosen.with(agent), qc);
      double gain = factor * (fe - f_chosen) - prices.p[agent];
      if (best_agent < 0 || gain > best_gain) {
        best_agent = agent;
        best_gain = gain;
        best_value = fe;
      }
    }
    if (best_agent >= 0 && best_gain > 0) {
      chosen.add(best_agent);
      in[best_agent] = true;
      f_chosen = best_value;
    }
  }
  return chosen;
}

std::vector<Rat> xos_supporting_additive(const RewardFunction& f, const AgentSet& s) {
  if (s.universe() != f.agents()) {
    throw std::invalid_argument("set universe does not match reward function");
  }
  auto pick = [&](const std::vector<std::vector<Rat>>& clauses) {
    Rat target = f.value_exact(s);
    for (const auto& clause : clauses) {
      Rat sum = 0;
      s.for_each([&](int i) { sum += clause[i]; });
      if (sum == target) return clause;
    }
    throw RepresentationError("no clause attains f(S); clause list is corrupt");
  };
  switch (f.kind()) {
    case RewardKind::kAdditive:
      return f.additive_data()->values;
    case RewardKind::kXosClauses:
      return pick(f.xos_data()->clauses);
    case RewardKind::kBumpedSymmetric: {
      const BumpedData& d = *f.bumped_data();
      if (d.has_bump_support_clauses) {
        return pick(bump_support_clauses(f.agents(), d.bump_set));
      }
      throw UnsupportedQueryError("no explicit clause list for this representation");
    }
    default:
      throw UnsupportedQueryError("no explicit clause list for this representation");
  }
}

}  // namespace contracts
