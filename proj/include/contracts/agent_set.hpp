// AgentSet: an exact subset of the ground set {0..n-1}, backed by a bit vector
// so the structured families scale to thousands of agents.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace contracts {

class AgentSet {
 public:
  AgentSet() = default;
  explicit AgentSet(int universe_size);

  static AgentSet from_members(int universe_size, std::initializer_list<int> members);
  static AgentSet from_members(int universe_size, const std::vector<int>& members);
  /// Bits of `mask` become members; requires universe_size <= 64.
  static AgentSet from_mask(int universe_size, std::uint64_t mask);
  static AgentSet full(int universe_size);
  /// Members lo..hi-1.
  static AgentSet range(int universe_size, int lo, int hi);

  int universe() const { return n_; }
  int size() const;
  bool empty() const;
  bool contains(int i) const;

  void add(int i);
  void remove(int i);
  AgentSet with(int i) const;
  AgentSet without(int i) const;

  bool subset_of(const AgentSet& other) const;
  AgentSet set_union(const AgentSet& other) const;
  AgentSet set_intersect(const AgentSet& other) const;
  AgentSet set_minus(const AgentSet& other) const;

  std::vector<int> members() const;
  std::uint64_t to_mask() const;  // requires universe <= 64

  bool operator==(const AgentSet& other) const = default;

  /// Sorted-member-list lexicographic order.
  static bool lex_less(const AgentSet& a, const AgentSet& b);
  /// The fixed tie order used everywhere: smaller cardinality first, then
  /// lexicographically smaller member list.
  static bool tie_less(const AgentSet& a, const AgentSet& b);

  std::string to_string() const;  // "{0, 2, 5}"

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        fn(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_index(int i) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace contracts
