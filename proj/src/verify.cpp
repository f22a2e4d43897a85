#include "contracts/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "contracts/rng.hpp"

namespace contracts {

const char* function_class_name(FunctionClass cls) {
  switch (cls) {
    case FunctionClass::kMonotone: return "monotone";
    case FunctionClass::kSubadditive: return "subadditive";
    case FunctionClass::kSubmodular: return "submodular";
    case FunctionClass::kXosSupported: return "xos-supported";
  }
  return "?";
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

AgentSet set_from_mask(int n, std::uint32_t mask) {
  AgentSet s(n);
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1) s.add(i);
  }
  return s;
}

// Exact value table over all subsets, with an optional integer-scaled copy
// (values * L for a common denominator L) that makes the big pairwise scans
// pure integer arithmetic. Falls back to rational comparisons when the
// denominators do not fit.
struct ExactTable {
  int n = 0;
  std::vector<Rat> vals;
  bool has_int = false;
  std::vector<long long> ints;

  static ExactTable build(const RewardFunction& f) {
    ExactTable t;
    t.n = f.agents();
    size_t size = size_t{1} << t.n;
    t.vals.resize(size);
    for (size_t mask = 0; mask < size; ++mask) {
      t.vals[mask] = f.value_exact(set_from_mask(t.n, static_cast<std::uint32_t>(mask)));
    }
    BigInt lcm = 1;
    const BigInt lcm_cap = BigInt(1) << 44;
    for (const Rat& v : t.vals) {
      BigInt den = denominator(v);
      lcm = lcm / gcd(lcm, den) * den;
      if (lcm > lcm_cap) return t;
    }
    const BigInt mag_cap = BigInt(1) << 61;
    std::vector<long long> ints(size);
    for (size_t mask = 0; mask < size; ++mask) {
      BigInt scaled = numerator(t.vals[mask]) * (lcm / denominator(t.vals[mask]));
      if (scaled > mag_cap || scaled < -mag_cap) return t;
      ints[mask] = scaled.convert_to<long long>();
    }
    t.has_int = true;
    t.ints = std::move(ints);
    return t;
  }
};

// Strictly better under (g desc, cardinality asc, lex asc) for mask-indexed
// candidates; for equal cardinalities the lex-smaller mask owns the lowest
// differing bit.
bool mask_tie_better(std::uint32_t challenger, int c_card, std::uint32_t best, int b_card) {
  if (c_card != b_card) return c_card < b_card;
  std::uint32_t diff = challenger ^ best;
  return diff != 0 && (challenger & (diff & (~diff + 1)));
}

OptResult brute_force_enumerated(const Instance& inst, QueryCounter* qc) {
  int n = inst.agents();
  size_t size = size_t{1} << n;
  std::vector<double> vf(size);
  for (size_t mask = 0; mask < size; ++mask) {
    vf[mask] = eval(inst.f, set_from_mask(n, static_cast<std::uint32_t>(mask)), qc);
  }
  std::uint32_t best_mask = 0;
  int best_card = 0;
  double best_g = 0;  // the empty set
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    double f_s = vf[mask];
    double shares = 0;
    bool infeasible = false;
    for (std::uint32_t bits = mask; bits;) {
      int i = std::countr_zero(bits);
      bits &= bits - 1;
      double c = inst.costs_d[i];
      if (c == 0) continue;
      double m = f_s - vf[mask ^ (std::uint32_t{1} << i)];
      if (m <= 0) {
        infeasible = true;
        break;
      }
      shares += c / m;
    }
    if (infeasible) continue;
    double g = (1.0 - shares) * f_s;
    int card = std::popcount(mask);
    if (g > best_g || (g == best_g && mask_tie_better(mask, card, best_mask, best_card))) {
      best_g = g;
      best_mask = mask;
      best_card = card;
    }
  }
  OptResult out;
  out.s_star = set_from_mask(n, best_mask);
  out.g_star = best_g;
  out.g_star_exact = principal_utility_exact(inst, out.s_star);
  out.evaluations = static_cast<long long>(size);
  return out;
}

OptResult brute_force_enumerated_exact(const Instance& inst) {
  int n = inst.agents();
  size_t size = size_t{1} << n;
  std::vector<Rat> vf(size);
  for (size_t mask = 0; mask < size; ++mask) {
    vf[mask] = inst.f.value_exact(set_from_mask(n, static_cast<std::uint32_t>(mask)));
  }
  std::uint32_t best_mask = 0;
  int best_card = 0;
  ExactUtility best_g = ExactUtility::of(Rat(0));
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    const Rat& f_s = vf[mask];
    Rat shares = 0;
    bool infeasible = false;
    for (std::uint32_t bits = mask; bits;) {
      int i = std::countr_zero(bits);
      bits &= bits - 1;
      if (inst.costs[i] == 0) continue;
      Rat m = f_s - vf[mask ^ (std::uint32_t{1} << i)];
      if (m <= 0) {
        infeasible = true;
        break;
      }
      shares += inst.costs[i] / m;
    }
    if (infeasible) continue;
    ExactUtility g = ExactUtility::of((Rat(1) - shares) * f_s);
    int card = std::popcount(mask);
    if (best_g < g || (best_g == g && mask_tie_better(mask, card, best_mask, best_card))) {
      best_g = g;
      best_mask = mask;
      best_card = card;
    }
  }
  OptResult out;
  out.s_star = set_from_mask(n, best_mask);
  out.g_star_exact = best_g;
  out.g_star = best_g.finite ? to_double(best_g.value) : kNegInf;
  out.evaluations = static_cast<long long>(size);
  return out;
}

// ---- structured optimum for cardinality-based rewards with uniform costs ----

struct SymmetricView {
  const std::vector<Rat>* by_card = nullptr;
  const AgentSet* bump_set = nullptr;  // null for plain symmetric tables
  Rat bump;

  int bump_size() const { return bump_set ? bump_set->size() : -1; }
};

std::optional<SymmetricView> symmetric_view(const RewardFunction& f) {
  if (const SymmetricData* d = f.symmetric_data()) return SymmetricView{&d->by_card, nullptr, 0};
  if (const BumpedData* d = f.bumped_data()) {
    return SymmetricView{&d->base.by_card, &d->bump_set, d->bump};
  }
  return std::nullopt;
}

bool uniform_costs(const Instance& inst) {
  for (size_t i = 1; i < inst.costs.size(); ++i) {
    if (inst.costs[i] != inst.costs[0]) return false;
  }
  return !inst.costs.empty();
}

// g for a size-k set in one of the three symmetry classes.
enum class SymClass { kGeneric, kEqualsBump, kCoversBump };

ExactUtility symmetric_class_utility(const SymmetricView& view, const Rat& cost, int k,
                                     SymClass cls) {
  const std::vector<Rat>& t = *view.by_card;
  if (k == 0) return ExactUtility::of(Rat(0));
  Rat f_s = t[k];
  if (cls == SymClass::kEqualsBump) f_s += view.bump;
  if (cost == 0) return ExactUtility::of(f_s);

  Rat base_marginal = t[k] - t[k - 1];
  Rat shares;
  switch (cls) {
    case SymClass::kGeneric: {
      if (base_marginal <= 0) return ExactUtility::neg_inf();
      shares = Rat(k) * (cost / base_marginal);
      break;
    }
    case SymClass::kEqualsBump: {
      Rat m = f_s - t[k - 1];
      if (m <= 0) return ExactUtility::neg_inf();
      shares = Rat(k) * (cost / m);
      break;
    }
    case SymClass::kCoversBump: {
      // One member closes the bump set when removed; its marginal loses the
      // bump. The other k-1 members see the plain cardinality marginal.
      Rat extra_marginal = base_marginal - view.bump;
      if (base_marginal <= 0 || extra_marginal <= 0) return ExactUtility::neg_inf();
      shares = Rat(k - 1) * (cost / base_marginal) + cost / extra_marginal;
      break;
    }
  }
  return ExactUtility::of((Rat(1) - shares) * f_s);
}

bool next_combination(std::vector<int>& comb, int n) {
  int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - (k - i)) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Lexicographically smallest size-k set that differs from the bump set and,
// when k == |bump|+1, does not contain it. Walks the combination order; the
// invalid sets (the bump set itself, or its n-|bump| covers) are few, so the
// walk ends quickly.
std::optional<AgentSet> lex_min_generic(int n, int k, const SymmetricView& view) {
  if (k > n) return std::nullopt;
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  int guard = 4 * n + 16;
  while (guard-- > 0) {
    AgentSet s = AgentSet::from_members(n, comb);
    bool valid = true;
    if (view.bump_set) {
      if (k == view.bump_size() && s == *view.bump_set) valid = false;
      if (k == view.bump_size() + 1 && view.bump_set->subset_of(s)) valid = false;
    }
    if (valid) return s;
    if (!next_combination(comb, n)) return std::nullopt;
  }
  return std::nullopt;
}

struct ClassCandidate {
  ExactUtility g;
  AgentSet rep;
};

std::vector<ClassCandidate> symmetric_candidates(const Instance& inst, bool exclude_bump) {
  auto view = *symmetric_view(inst.f);
  const Rat& cost = inst.costs[0];
  int n = inst.agents();
  std::vector<ClassCandidate> out;
  out.push_back({ExactUtility::of(Rat(0)), AgentSet(n)});
  for (int k = 1; k <= n; ++k) {
    if (auto rep = lex_min_generic(n, k, view)) {
      out.push_back({symmetric_class_utility(view, cost, k, SymClass::kGeneric), *rep});
    }
    if (view.bump_set && k == view.bump_size() && !exclude_bump) {
      out.push_back(
          {symmetric_class_utility(view, cost, k, SymClass::kEqualsBump), *view.bump_set});
    }
    if (view.bump_set && k == view.bump_size() + 1 && k <= n) {
      int extra = -1;
      for (int i = 0; i < n; ++i) {
        if (!view.bump_set->contains(i)) {
          extra = i;
          break;
        }
      }
      if (extra >= 0) {
        out.push_back({symmetric_class_utility(view, cost, k, SymClass::kCoversBump),
                       view.bump_set->with(extra)});
      }
    }
  }
  return out;
}

OptResult structured_opt(const Instance& inst) {
  std::vector<ClassCandidate> candidates = symmetric_candidates(inst, /*exclude_bump=*/false);
  size_t best = 0;
  for (size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[best].g < candidates[i].g ||
        (candidates[best].g == candidates[i].g &&
         AgentSet::tie_less(candidates[i].rep, candidates[best].rep))) {
      best = i;
    }
  }
  OptResult out;
  out.s_star = candidates[best].rep;
  out.g_star_exact = candidates[best].g;
  out.g_star = out.g_star_exact.finite ? to_double(out.g_star_exact.value) : kNegInf;
  out.evaluations = static_cast<long long>(candidates.size());
  return out;
}

bool structured_applicable(const Instance& inst) {
  return symmetric_view(inst.f).has_value() && uniform_costs(inst);
}

}  // namespace

OptResult brute_force_opt(const Instance& inst, QueryCounter* qc) {
  if (structured_applicable(inst)) return structured_opt(inst);
  if (inst.agents() > kBruteForceMaxAgents) {
    throw UnsupportedQueryError("brute force limited to " +
                                std::to_string(kBruteForceMaxAgents) + " agents for this kind");
  }
  return brute_force_enumerated(inst, qc);
}

OptResult brute_force_opt_exact(const Instance& inst) {
  if (structured_applicable(inst)) return structured_opt(inst);
  if (inst.agents() > kExactBruteForceMaxAgents) {
    throw UnsupportedQueryError("exact brute force limited to " +
                                std::to_string(kExactBruteForceMaxAgents) + " agents");
  }
  return brute_force_enumerated_exact(inst);
}

namespace {

CheckResult fail_with(AgentSet a, AgentSet b, int agent, std::string detail, long long checks) {
  CheckResult r;
  r.pass = false;
  r.witness_a = std::move(a);
  r.witness_b = std::move(b);
  r.witness_agent = agent;
  r.detail = std::move(detail);
  r.checks = checks;
  return r;
}

CheckResult check_monotone(const ExactTable& t) {
  CheckResult r;
  int n = t.n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) continue;
      std::uint32_t up = mask | (std::uint32_t{1} << i);
      ++r.checks;
      bool bad = t.has_int ? t.ints[up] < t.ints[mask] : t.vals[up] < t.vals[mask];
      if (bad) {
        return fail_with(set_from_mask(n, mask), set_from_mask(n, up), i,
                         "adding agent " + std::to_string(i) + " decreases the value", r.checks);
      }
    }
  }
  return r;
}

CheckResult check_subadditive(const ExactTable& t) {
  CheckResult r;
  int n = t.n;
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) {
    std::uint32_t comp = (std::uint32_t{1} << n) - 1 - a;
    for (std::uint32_t b = comp;; b = (b - 1) & comp) {
      if (b) {
        ++r.checks;
        bool bad = t.has_int ? t.ints[a] + t.ints[b] < t.ints[a | b]
                             : t.vals[a] + t.vals[b] < t.vals[a | b];
        if (bad) {
          return fail_with(set_from_mask(n, a), set_from_mask(n, b), -1,
                           "disjoint pair values sum below the union value", r.checks);
        }
      }
      if (b == 0) break;
    }
  }
  return r;
}

CheckResult check_submodular(const ExactTable& t) {
  CheckResult r;
  int n = t.n;
  // Pairwise form: f(i | S + j) <= f(i | S) for all S and distinct i, j
  // outside S; equivalent to the nested-set definition.
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) continue;
      for (int j = i + 1; j < n; ++j) {
        if (mask >> j & 1) continue;
        std::uint32_t bi = std::uint32_t{1} << i, bj = std::uint32_t{1} << j;
        ++r.checks;
        bool bad;
        if (t.has_int) {
          bad = t.ints[mask | bi | bj] + t.ints[mask] > t.ints[mask | bi] + t.ints[mask | bj];
        } else {
          bad = t.vals[mask | bi | bj] + t.vals[mask] > t.vals[mask | bi] + t.vals[mask | bj];
        }
        if (bad) {
          return fail_with(set_from_mask(n, mask), set_from_mask(n, mask | bj), i,
                           "marginal of agent " + std::to_string(i) + " rises from S to S'",
                           r.checks);
        }
      }
    }
  }
  return r;
}

std::optional<std::vector<std::vector<Rat>>> clause_list_of(const RewardFunction& f) {
  switch (f.kind()) {
    case RewardKind::kAdditive:
      return std::vector<std::vector<Rat>>{f.additive_data()->values};
    case RewardKind::kXosClauses:
      return f.xos_data()->clauses;
    case RewardKind::kBumpedSymmetric:
      if (f.bumped_data()->has_bump_support_clauses) {
        return bump_support_clauses(f.agents(), f.bumped_data()->bump_set);
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

Rat clause_max(const std::vector<std::vector<Rat>>& clauses, const AgentSet& s) {
  Rat best = 0;
  for (const auto& clause : clauses) {
    Rat sum = 0;
    s.for_each([&](int i) { sum += clause[i]; });
    if (sum > best) best = sum;
  }
  return best;
}

CheckResult check_xos_supported(const Instance& inst) {
  auto clauses = clause_list_of(inst.f);
  if (!clauses) {
    throw UnsupportedQueryError("xos-supported check needs an explicit clause list");
  }
  CheckResult r;
  int n = inst.agents();
  auto test = [&](const AgentSet& s) -> bool {
    ++r.checks;
    Rat mx = clause_max(*clauses, s);
    Rat fv = inst.f.value_exact(s);
    if (mx == fv) return true;
    r = fail_with(s, s, -1,
                  mx < fv ? "no clause attains f(S)" : "a clause exceeds f(S)", r.checks);
    return false;
  };
  if (n <= kClassCheckMaxAgents) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      if (!test(set_from_mask(n, mask))) return r;
    }
    return r;
  }
  // Structured spot check: per cardinality, the bump-heavy and bump-avoiding
  // patterns are the extremal ones for every clause shape.
  const BumpedData* bumped = inst.f.bumped_data();
  const AgentSet& hidden = bumped->bump_set;
  std::vector<int> in_t = hidden.members();
  std::vector<int> out_t;
  for (int i = 0; i < n; ++i) {
    if (!hidden.contains(i)) out_t.push_back(i);
  }
  for (int k = 0; k <= n; ++k) {
    AgentSet heavy(n), light(n);
    for (int j = 0; j < k; ++j) {
      int pick_heavy = j < static_cast<int>(in_t.size())
                           ? in_t[j]
                           : out_t[j - static_cast<int>(in_t.size())];
      int pick_light = j < static_cast<int>(out_t.size())
                           ? out_t[j]
                           : in_t[j - static_cast<int>(out_t.size())];
      heavy.add(pick_heavy);
      light.add(pick_light);
    }
    if (!test(heavy) || !test(light)) return r;
  }
  return r;
}

}  // namespace

CheckResult check_class(const Instance& inst, FunctionClass cls) {
  if (cls == FunctionClass::kXosSupported) return check_xos_supported(inst);
  if (inst.agents() > kClassCheckMaxAgents) {
    throw UnsupportedQueryError("exhaustive class checks limited to " +
                                std::to_string(kClassCheckMaxAgents) + " agents");
  }
  ExactTable table = ExactTable::build(inst.f);
  switch (cls) {
    case FunctionClass::kMonotone: return check_monotone(table);
    case FunctionClass::kSubadditive: return check_subadditive(table);
    case FunctionClass::kSubmodular: return check_submodular(table);
    default: throw std::logic_error("unreachable");
  }
}

CheckResult check_marginal_sum_dominance(const Instance& inst, long long trials,
                                         std::uint64_t seed) {
  int n = inst.agents();
  CheckResult r;
  auto test = [&](const AgentSet& small, const AgentSet& big) -> bool {
    ++r.checks;
    Rat f_big = inst.f.value_exact(big);
    Rat sum = 0;
    small.for_each([&](int i) { sum += f_big - inst.f.value_exact(big.without(i)); });
    if (sum <= inst.f.value_exact(small)) return true;
    r = fail_with(small, big, -1, "marginal sum inside T exceeds f(S)", r.checks);
    return false;
  };
  if (n <= kMarginalSumExhaustiveMax) {
    for (std::uint32_t big = 0; big < (std::uint32_t{1} << n); ++big) {
      AgentSet big_set = set_from_mask(n, big);
      for (std::uint32_t small = big;; small = (small - 1) & big) {
        if (!test(set_from_mask(n, small), big_set)) return r;
        if (small == 0) break;
      }
    }
    return r;
  }
  Rng rng(seed);
  for (long long t = 0; t < trials; ++t) {
    AgentSet big(n), small(n);
    for (int i = 0; i < n; ++i) {
      if (rng.chance(1, 2)) {
        big.add(i);
        if (rng.chance(1, 2)) small.add(i);
      }
    }
    if (!test(small, big)) return r;
  }
  return r;
}

ScalingCheck check_scaling_output(const RewardFunction& f, const AgentSet& t,
                                  const ScalingParams& params, const AgentSet& u) {
  ScalingCheck out;
  if (!u.subset_of(t)) {
    out.pass = false;
    out.failed = ScalingBound::kLower;
    out.detail = "U is not a subset of T";
    return out;
  }
  Rat psi = rat_from_double(params.psi);
  Rat delta = rat_from_double(params.delta);
  Rat f_u = f.value_exact(u);
  Rat max_single = 0;
  t.for_each([&](int i) { max_single = std::max(max_single, f.singleton_value_exact(i)); });

  if (f_u < (Rat(1) - delta) * psi) {
    out.pass = false;
    out.failed = ScalingBound::kLower;
    out.detail = "f(U) < (1-delta) * psi";
    return out;
  }
  if (f_u > psi + max_single) {
    out.pass = false;
    out.failed = ScalingBound::kUpper;
    out.detail = "f(U) > psi + max singleton";
    return out;
  }
  bool ok = true;
  u.for_each([&](int i) {
    if (!ok) return;
    Rat left = f_u - f.value_exact(u.without(i));
    Rat right = delta * (f.value_exact(t) - f.value_exact(t.without(i)));
    if (left < right) {
      ok = false;
      out.pass = false;
      out.failed = ScalingBound::kMarginal;
      out.detail = "marginal of agent " + std::to_string(i) + " dropped below delta share";
    }
  });
  return out;
}

CheckResult check_sqrt_cost_bound(const Instance& inst) {
  OptResult opt = brute_force_opt(inst);
  std::vector<int> members = opt.s_star.members();
  if (members.size() > 20) {
    throw UnsupportedQueryError("optimum too large to enumerate its subsets");
  }
  CheckResult r;
  int n = inst.agents();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << members.size()); ++mask) {
    AgentSet s(n);
    double sqrt_sum = 0;
    for (size_t j = 0; j < members.size(); ++j) {
      if (mask >> j & 1) {
        s.add(members[j]);
        sqrt_sum += std::sqrt(inst.costs_d[members[j]]);
      }
    }
    ++r.checks;
    if (sqrt_sum > std::sqrt(inst.f.value(s)) + kCheckSlack) {
      return fail_with(s, opt.s_star, -1, "sqrt-cost sum exceeds sqrt reward inside the optimum",
                       r.checks);
    }
  }
  return r;
}

CheckResult check_half_value_condition(const Instance& inst) {
  int n = inst.agents();
  if (n > kClassCheckMaxAgents) {
    throw UnsupportedQueryError("half-value filter check limited to " +
                                std::to_string(kClassCheckMaxAgents) + " agents");
  }
  size_t size = size_t{1} << n;
  std::vector<double> vf(size);
  for (size_t mask = 0; mask < size; ++mask) {
    vf[mask] = inst.f.value(set_from_mask(n, static_cast<std::uint32_t>(mask)));
  }
  CheckResult r;
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    double f_s = vf[mask];
    if (!(f_s > 0)) continue;
    bool hypothesis = true;
    double shares = 0;
    bool infeasible = false;
    for (std::uint32_t bits = mask; bits && hypothesis; bits &= bits - 1) {
      int i = std::countr_zero(bits);
      double m = f_s - vf[mask ^ (std::uint32_t{1} << i)];
      if (m < std::sqrt(2.0 * inst.costs_d[i] * f_s)) hypothesis = false;
      if (inst.costs_d[i] > 0) {
        if (m <= 0) {
          infeasible = true;
        } else {
          shares += inst.costs_d[i] / m;
        }
      }
    }
    if (!hypothesis) continue;
    ++r.checks;
    double g = infeasible ? kNegInf : (1.0 - shares) * f_s;
    if (g < 0.5 * f_s - kCheckSlack) {
      return fail_with(set_from_mask(n, mask), set_from_mask(n, mask), -1,
                       "set meets the marginal hypothesis but g < f/2", r.checks);
    }
  }
  return r;
}

CheckResult check_single_agent_decomposition(const Instance& inst) {
  OptResult opt = brute_force_opt(inst);
  CheckResult r;
  r.checks = 1;
  if (!opt.g_star_exact.finite) return r;  // nothing to bound
  AgentSet a_prime = cheap_agents(inst);
  double f_cap = inst.f.value(opt.s_star.set_intersect(a_prime));
  auto [best_single, best_single_g] = best_single_agent(inst);
  double bound = f_cap + std::max(0.0, best_single_g);
  if (opt.g_star > bound + kCheckSlack) {
    return fail_with(opt.s_star, a_prime, -1,
                     "g(S*) exceeds f(S* intersect A') + best singleton utility", r.checks);
  }
  return r;
}

namespace {

// Cardinality-case subadditivity for the bumped families at large n: the
// disjoint-pair inequality only depends on the two cardinalities, with one
// extra case when the union can hit the bump set while neither side does.
CheckResult check_subadditive_structured(const Instance& inst) {
  const BumpedData& d = *inst.f.bumped_data();
  const std::vector<Rat>& t = d.base.by_card;
  int n = inst.agents();
  int bump_card = d.bump_set.size();
  CheckResult r;
  for (int k1 = 0; k1 <= n; ++k1) {
    for (int k2 = 0; k1 + k2 <= n; ++k2) {
      ++r.checks;
      if (t[k1] + t[k2] < t[k1 + k2]) {
        return fail_with(AgentSet::range(n, 0, k1), AgentSet::range(n, k1, k1 + k2), -1,
                         "cardinality pair breaks subadditivity", r.checks);
      }
      if (k1 >= 1 && k2 >= 1 && k1 + k2 == bump_card && t[k1] + t[k2] < t[k1 + k2] + d.bump) {
        // Witness: two proper parts of the bump set whose union is the bump set.
        std::vector<int> hidden = d.bump_set.members();
        AgentSet part1(n), part2(n);
        for (int j = 0; j < k1; ++j) part1.add(hidden[j]);
        for (int j = k1; j < k1 + k2; ++j) part2.add(hidden[j]);
        return fail_with(std::move(part1), std::move(part2), -1,
                         "two proper parts of the bump set break subadditivity", r.checks);
      }
    }
  }
  return r;
}

}  // namespace

bool LbFamilyReport::pass() const {
  if (!structure.pass || !sandwich.pass) return false;
  if (separation_checked && !separation_ok) return false;
  return true;
}

LbFamilyReport lb_family_report(const Instance& inst) {
  const BumpedData* bumped = inst.f.bumped_data();
  if (!bumped || !uniform_costs(inst)) {
    throw std::invalid_argument("family report needs a bumped-symmetric reward, uniform costs");
  }
  int n = inst.agents();
  LbFamilyReport rep;
  rep.hidden_set = bumped->bump_set;
  rep.family = bumped->has_bump_support_clauses ? "xos-lb" : "subadditive-lb";

  ExactUtility g_t = principal_utility_exact(inst, bumped->bump_set);
  rep.hidden_utility = g_t.finite ? g_t.value : Rat(0);

  // Per-cardinality maxima over all sets other than the hidden one.
  rep.per_cardinality_max.assign(n + 1, ExactUtility::neg_inf());
  rep.max_other = ExactUtility::neg_inf();
  for (const ClassCandidate& cand : symmetric_candidates(inst, /*exclude_bump=*/true)) {
    int k = cand.rep.size();
    if (rep.per_cardinality_max[k] < cand.g) rep.per_cardinality_max[k] = cand.g;
    if (rep.max_other < cand.g) rep.max_other = cand.g;
  }

  if (rep.family == "subadditive-lb") {
    rep.separation_cap = Rat(5);
    rep.separation_checked = true;
    rep.structure = n <= kClassCheckMaxAgents
                        ? check_class(inst, FunctionClass::kSubadditive)
                        : check_subadditive_structured(inst);

    // Submodular envelope f'(k) = min(3 + 2k/sqrt(n), 3 + sqrt(n)) with
    // factor 1 + 3/(3 + sqrt(n)).
    int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    rep.sandwich_factor = Rat(1) + Rat(3, 3 + root);
    const std::vector<Rat>& table = bumped->base.by_card;
    for (int k = 0; k <= n && rep.sandwich.pass; ++k) {
      Rat lo = k == 0 ? Rat(0) : std::min(Rat(3) + Rat(2 * k, root), Rat(3 + root));
      ++rep.sandwich.checks;
      Rat value = table[k];
      Rat bumped_value = k == bumped->bump_set.size() ? value + bumped->bump : value;
      if (value < lo || bumped_value > rep.sandwich_factor * lo) {
        rep.sandwich.pass = false;
        rep.sandwich.detail = "envelope violated at cardinality " + std::to_string(k);
      }
    }
  } else {
    rep.separation_cap = Rat(11, 10);
    rep.separation_checked = n >= kXosLbCapThreshold;
    if (!rep.separation_checked) {
      rep.notes.push_back("separation cap 11/10 only binds for n >= " +
                          std::to_string(kXosLbCapThreshold) + "; maxima reported exactly");
    }
    rep.structure = check_xos_supported(inst);
  }

  if (rep.max_other.finite && rep.max_other.value > rep.separation_cap) {
    rep.separation_ok = false;
  }
  for (const std::string& w : inst.meta.warnings) rep.notes.push_back(w);
  return rep;
}

}  // namespace contracts
