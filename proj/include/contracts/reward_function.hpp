// Reward function representations and their closed-form evaluation.
//
// Every payload stores exact rationals plus double mirrors. Algorithms read
// the double channel; the verification suite reads the exact channel.
// Construction validates the cheap invariants (normalization, nonnegative
// weights, monotone cardinality tables); monotonicity of the general kinds is
// a checker concern, not a constructor concern, so that deliberately broken
// instances remain constructible as negative controls.
#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "contracts/agent_set.hpp"
#include "contracts/rational.hpp"

namespace contracts {

enum class RewardKind {
  kAdditive,
  kXosClauses,
  kCoverage,
  kSymmetricTable,
  kBumpedSymmetric,
  kTable,
};

const char* reward_kind_name(RewardKind kind);

struct AdditiveData {
  std::vector<Rat> values;
  std::vector<double> values_d;
  bool operator==(const AdditiveData& o) const { return values == o.values; }
};

struct XosData {
  int n = 0;
  std::vector<std::vector<Rat>> clauses;  // k clauses, n weights each
  std::vector<std::vector<double>> clauses_d;
  bool operator==(const XosData& o) const { return n == o.n && clauses == o.clauses; }
};

struct CoverageData {
  int n = 0;
  int universe = 0;  // m elements
  std::vector<Rat> weights;
  std::vector<double> weights_d;
  std::vector<std::vector<std::uint64_t>> cover;  // per agent, bit words over the universe
  bool operator==(const CoverageData& o) const {
    return n == o.n && universe == o.universe && weights == o.weights && cover == o.cover;
  }
};

struct SymmetricData {
  std::vector<Rat> by_card;  // size n+1, by_card[0] == 0, nondecreasing
  std::vector<double> by_card_d;
  bool operator==(const SymmetricData& o) const { return by_card == o.by_card; }
};

struct BumpedData {
  SymmetricData base;
  AgentSet bump_set;
  Rat bump;
  double bump_d = 0;
  // When set, the function is certified XOS by an explicit clause list
  // (singleton-peak clauses plus one clause supported on the bump set);
  // see bump_support_clauses().
  bool has_bump_support_clauses = false;
  bool operator==(const BumpedData& o) const {
    return base == o.base && bump_set == o.bump_set && bump == o.bump &&
           has_bump_support_clauses == o.has_bump_support_clauses;
  }
};

struct TableData {
  int n = 0;  // n <= 24
  std::vector<Rat> by_mask;
  std::vector<double> by_mask_d;
  bool operator==(const TableData& o) const { return n == o.n && by_mask == o.by_mask; }
};

class RewardFunction {
 public:
  static RewardFunction additive(std::vector<Rat> values);
  static RewardFunction xos(int n, std::vector<std::vector<Rat>> clauses);
  static RewardFunction coverage(int n, int universe, std::vector<Rat> weights,
                                 const std::vector<std::vector<int>>& cover_sets);
  static RewardFunction symmetric(std::vector<Rat> value_by_cardinality);
  static RewardFunction bumped_symmetric(std::vector<Rat> value_by_cardinality, AgentSet bump_set,
                                         Rat bump_amount, bool has_bump_support_clauses = false);
  static RewardFunction table(int n, std::vector<Rat> value_by_mask);

  int agents() const { return n_; }
  RewardKind kind() const { return kind_; }

  /// Closed-form f(S) on the double channel. Raw representation access; the
  /// oracle wrappers in oracles.hpp add query counting.
  double value(const AgentSet& s) const;
  Rat value_exact(const AgentSet& s) const;

  double singleton_value(int i) const { return singletons_d_[i]; }
  Rat singleton_value_exact(int i) const;

  const AdditiveData* additive_data() const { return std::get_if<AdditiveData>(&payload_); }
  const XosData* xos_data() const { return std::get_if<XosData>(&payload_); }
  const CoverageData* coverage_data() const { return std::get_if<CoverageData>(&payload_); }
  const SymmetricData* symmetric_data() const { return std::get_if<SymmetricData>(&payload_); }
  const BumpedData* bumped_data() const { return std::get_if<BumpedData>(&payload_); }
  const TableData* table_data() const { return std::get_if<TableData>(&payload_); }

  bool operator==(const RewardFunction& o) const {
    return n_ == o.n_ && kind_ == o.kind_ && payload_ == o.payload_;
  }

 private:
  RewardFunction(int n, RewardKind kind,
                 std::variant<AdditiveData, XosData, CoverageData, SymmetricData, BumpedData,
                              TableData>
                     payload);

  void check_set(const AgentSet& s) const;

  int n_ = 0;
  RewardKind kind_ = RewardKind::kAdditive;
  std::variant<AdditiveData, XosData, CoverageData, SymmetricData, BumpedData, TableData> payload_;
  std::vector<double> singletons_d_;
};

/// The explicit clause list certifying that a bumped symmetric function with
/// base 1 + 3k/n (k <= n/2), 1/2 + 4k/n (k > n/2) and bump 1/n is XOS:
/// one peak clause and one slope clause per agent, plus a clause supported on
/// the bump set with weight 5/n. Order: peak_0, slope_0, ..., peak_{n-1},
/// slope_{n-1}, bump clause.
std::vector<std::vector<Rat>> bump_support_clauses(int n, const AgentSet& bump_set);

inline constexpr int kTableKindMaxAgents = 24;

}  // namespace contracts
