#include "contracts/reward_function.hpp"

#include <stdexcept>
#include <utility>

namespace contracts {

const char* reward_kind_name(RewardKind kind) {
  switch (kind) {
    case RewardKind::kAdditive: return "additive";
    case RewardKind::kXosClauses: return "xos-clauses";
    case RewardKind::kCoverage: return "coverage";
    case RewardKind::kSymmetricTable: return "symmetric-table";
    case RewardKind::kBumpedSymmetric: return "bumped-symmetric";
    case RewardKind::kTable: return "table";
  }
  return "?";
}

namespace {

std::vector<double> mirror(const std::vector<Rat>& xs) {
  std::vector<double> out(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) out[i] = to_double(xs[i]);
  return out;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_table_by_card(const std::vector<Rat>& t) {
  require(!t.empty(), "cardinality table must be nonempty");
  require(t[0] == 0, "reward not normalized: table[0] != 0");
  for (size_t k = 1; k < t.size(); ++k) {
    require(t[k] >= t[k - 1], "cardinality table must be nondecreasing");
  }
}

}  // namespace

RewardFunction::RewardFunction(
    int n, RewardKind kind,
    std::variant<AdditiveData, XosData, CoverageData, SymmetricData, BumpedData, TableData>
        payload)
    : n_(n), kind_(kind), payload_(std::move(payload)) {
  singletons_d_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    AgentSet s(n_);
    s.add(i);
    singletons_d_[i] = value(s);
  }
}

RewardFunction RewardFunction::additive(std::vector<Rat> values) {
  int n = static_cast<int>(values.size());
  for (const Rat& v : values) require(v >= 0, "additive values must be nonnegative");
  AdditiveData d{std::move(values), {}};
  d.values_d = mirror(d.values);
  return RewardFunction(n, RewardKind::kAdditive, std::move(d));
}

RewardFunction RewardFunction::xos(int n, std::vector<std::vector<Rat>> clauses) {
  require(n >= 0, "negative agent count");
  require(!clauses.empty(), "xos needs at least one clause");
  for (const auto& clause : clauses) {
    require(static_cast<int>(clause.size()) == n, "clause length must equal agent count");
    for (const Rat& w : clause) require(w >= 0, "clause weights must be nonnegative");
  }
  XosData d{n, std::move(clauses), {}};
  d.clauses_d.reserve(d.clauses.size());
  for (const auto& clause : d.clauses) d.clauses_d.push_back(mirror(clause));
  return RewardFunction(n, RewardKind::kXosClauses, std::move(d));
}

RewardFunction RewardFunction::coverage(int n, int universe, std::vector<Rat> weights,
                                        const std::vector<std::vector<int>>& cover_sets) {
  require(n >= 0, "negative agent count");
  require(universe > 0, "coverage universe must be nonempty");
  require(static_cast<int>(weights.size()) == universe, "one weight per universe element");
  for (const Rat& w : weights) require(w >= 0, "element weights must be nonnegative");
  require(static_cast<int>(cover_sets.size()) == n, "one cover set per agent");
  CoverageData d;
  d.n = n;
  d.universe = universe;
  d.weights = std::move(weights);
  d.weights_d = mirror(d.weights);
  size_t words = (static_cast<size_t>(universe) + 63) / 64;
  d.cover.assign(n, std::vector<std::uint64_t>(words, 0));
  for (int a = 0; a < n; ++a) {
    for (int e : cover_sets[a]) {
      require(e >= 0 && e < universe, "cover element out of range");
      d.cover[a][e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }
  return RewardFunction(n, RewardKind::kCoverage, std::move(d));
}

RewardFunction RewardFunction::symmetric(std::vector<Rat> value_by_cardinality) {
  check_table_by_card(value_by_cardinality);
  int n = static_cast<int>(value_by_cardinality.size()) - 1;
  SymmetricData d{std::move(value_by_cardinality), {}};
  d.by_card_d = mirror(d.by_card);
  return RewardFunction(n, RewardKind::kSymmetricTable, std::move(d));
}

RewardFunction RewardFunction::bumped_symmetric(std::vector<Rat> value_by_cardinality,
                                                AgentSet bump_set, Rat bump_amount,
                                                bool has_bump_support_clauses) {
  check_table_by_card(value_by_cardinality);
  int n = static_cast<int>(value_by_cardinality.size()) - 1;
  require(bump_set.universe() == n, "bump set universe mismatch");
  require(bump_amount >= 0, "bump amount must be nonnegative");
  require(!bump_set.empty() || bump_amount == 0, "empty bump set breaks normalization");
  BumpedData d;
  d.base.by_card = std::move(value_by_cardinality);
  d.base.by_card_d = mirror(d.base.by_card);
  d.bump_set = std::move(bump_set);
  d.bump = std::move(bump_amount);
  d.bump_d = to_double(d.bump);
  d.has_bump_support_clauses = has_bump_support_clauses;
  return RewardFunction(n, RewardKind::kBumpedSymmetric, std::move(d));
}

RewardFunction RewardFunction::table(int n, std::vector<Rat> value_by_mask) {
  require(n >= 0 && n <= kTableKindMaxAgents, "table kind limited to 24 agents");
  require(value_by_mask.size() == (size_t{1} << n), "table needs one value per subset");
  require(value_by_mask[0] == 0, "reward not normalized: f(empty) != 0");
  for (const Rat& v : value_by_mask) require(v >= 0, "table values must be nonnegative");
  TableData d{n, std::move(value_by_mask), {}};
  d.by_mask_d = mirror(d.by_mask);
  return RewardFunction(n, RewardKind::kTable, std::move(d));
}

void RewardFunction::check_set(const AgentSet& s) const {
  if (s.universe() != n_) {
    throw std::invalid_argument("set universe does not match reward function");
  }
}

double RewardFunction::value(const AgentSet& s) const {
  check_set(s);
  switch (kind_) {
    case RewardKind::kAdditive: {
      const auto& d = std::get<AdditiveData>(payload_);
      double sum = 0;
      s.for_each([&](int i) { sum += d.values_d[i]; });
      return sum;
    }
    case RewardKind::kXosClauses: {
      const auto& d = std::get<XosData>(payload_);
      double best = 0;
      for (const auto& clause : d.clauses_d) {
        double sum = 0;
        s.for_each([&](int i) { sum += clause[i]; });
        if (sum > best) best = sum;
      }
      return best;
    }
    case RewardKind::kCoverage: {
      const auto& d = std::get<CoverageData>(payload_);
      size_t words = (static_cast<size_t>(d.universe) + 63) / 64;
      double sum = 0;
      for (size_t w = 0; w < words; ++w) {
        std::uint64_t covered = 0;
        s.for_each([&](int a) { covered |= d.cover[a][w]; });
        while (covered) {
          int b = __builtin_ctzll(covered);
          sum += d.weights_d[w * 64 + b];
          covered &= covered - 1;
        }
      }
      return sum;
    }
    case RewardKind::kSymmetricTable:
      return std::get<SymmetricData>(payload_).by_card_d[s.size()];
    case RewardKind::kBumpedSymmetric: {
      const auto& d = std::get<BumpedData>(payload_);
      double v = d.base.by_card_d[s.size()];
      if (s == d.bump_set) v += d.bump_d;
      return v;
    }
    case RewardKind::kTable:
      return std::get<TableData>(payload_).by_mask_d[s.to_mask()];
  }
  return 0;
}

Rat RewardFunction::value_exact(const AgentSet& s) const {
  check_set(s);
  switch (kind_) {
    case RewardKind::kAdditive: {
      const auto& d = std::get<AdditiveData>(payload_);
      Rat sum = 0;
      s.for_each([&](int i) { sum += d.values[i]; });
      return sum;
    }
    case RewardKind::kXosClauses: {
      const auto& d = std::get<XosData>(payload_);
      Rat best = 0;
      for (const auto& clause : d.clauses) {
        Rat sum = 0;
        s.for_each([&](int i) { sum += clause[i]; });
        if (sum > best) best = sum;
      }
      return best;
    }
    case RewardKind::kCoverage: {
      const auto& d = std::get<CoverageData>(payload_);
      size_t words = (static_cast<size_t>(d.universe) + 63) / 64;
      Rat sum = 0;
      for (size_t w = 0; w < words; ++w) {
        std::uint64_t covered = 0;
        s.for_each([&](int a) { covered |= d.cover[a][w]; });
        while (covered) {
          int b = __builtin_ctzll(covered);
          sum += d.weights[w * 64 + b];
          covered &= covered - 1;
        }
      }
      return sum;
    }
    case RewardKind::kSymmetricTable:
      return std::get<SymmetricData>(payload_).by_card[s.size()];
    case RewardKind::kBumpedSymmetric: {
      const auto& d = std::get<BumpedData>(payload_);
      Rat v = d.base.by_card[s.size()];
      if (s == d.bump_set) v += d.bump;
      return v;
    }
    case RewardKind::kTable:
      return std::get<TableData>(payload_).by_mask[s.to_mask()];
  }
  return 0;
}

Rat RewardFunction::singleton_value_exact(int i) const {
  AgentSet s(n_);
  s.add(i);
  return value_exact(s);
}

std::vector<std::vector<Rat>> bump_support_clauses(int n, const AgentSet& bump_set) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("clause witness needs even n > 0");
  if (bump_set.universe() != n || bump_set.size() != n / 2 + 1) {
    throw std::invalid_argument("bump set must have n/2 + 1 members");
  }
  std::vector<std::vector<Rat>> clauses;
  clauses.reserve(2 * static_cast<size_t>(n) + 1);
  const Rat three_over_n(3, n), four_over_n(4, n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> peak(n, three_over_n);
    peak[i] = Rat(1) + three_over_n;
    clauses.push_back(std::move(peak));
    std::vector<Rat> slope(n, four_over_n);
    slope[i] = Rat(1, 2) + four_over_n;
    clauses.push_back(std::move(slope));
  }
  std::vector<Rat> bump_clause(n, Rat(0));
  bump_set.for_each([&](int i) { bump_clause[i] = Rat(5, n); });
  clauses.push_back(std::move(bump_clause));
  return clauses;
}

}  // namespace contracts
