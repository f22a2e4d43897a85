#include "contracts/agent_set.hpp"

#include <bit>
#include <stdexcept>

namespace contracts {

namespace {
size_t word_count(int n) { return (static_cast<size_t>(n) + 63) / 64; }
}  // namespace

AgentSet::AgentSet(int universe_size) : n_(universe_size), words_(word_count(universe_size), 0) {
  if (universe_size < 0) throw std::invalid_argument("AgentSet: negative universe");
}

AgentSet AgentSet::from_members(int n, std::initializer_list<int> members) {
  AgentSet s(n);
  for (int i : members) s.add(i);
  return s;
}

AgentSet AgentSet::from_members(int n, const std::vector<int>& members) {
  AgentSet s(n);
  for (int i : members) s.add(i);
  return s;
}

AgentSet AgentSet::from_mask(int n, std::uint64_t mask) {
  if (n > 64) throw std::invalid_argument("AgentSet::from_mask: universe too large");
  if (n < 64 && (mask >> n) != 0) throw std::out_of_range("AgentSet::from_mask: stray bits");
  AgentSet s(n);
  if (n > 0) s.words_[0] = mask;
  return s;
}

AgentSet AgentSet::full(int n) { return range(n, 0, n); }

AgentSet AgentSet::range(int n, int lo, int hi) {
  AgentSet s(n);
  for (int i = lo; i < hi; ++i) s.add(i);
  return s;
}

int AgentSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool AgentSet::empty() const {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

void AgentSet::check_index(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("agent index out of range");
}

bool AgentSet::contains(int i) const {
  check_index(i);
  return (words_[i / 64] >> (i % 64)) & 1;
}

void AgentSet::add(int i) {
  check_index(i);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void AgentSet::remove(int i) {
  check_index(i);
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

AgentSet AgentSet::with(int i) const {
  AgentSet s = *this;
  s.add(i);
  return s;
}

AgentSet AgentSet::without(int i) const {
  AgentSet s = *this;
  s.remove(i);
  return s;
}

namespace {
void check_same_universe(const AgentSet& a, const AgentSet& b) {
  if (a.universe() != b.universe()) {
    throw std::invalid_argument("AgentSet: mismatched universes");
  }
}
}  // namespace

bool AgentSet::subset_of(const AgentSet& other) const {
  check_same_universe(*this, other);
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

AgentSet AgentSet::set_union(const AgentSet& other) const {
  check_same_universe(*this, other);
  AgentSet s = *this;
  for (size_t w = 0; w < words_.size(); ++w) s.words_[w] |= other.words_[w];
  return s;
}

AgentSet AgentSet::set_intersect(const AgentSet& other) const {
  check_same_universe(*this, other);
  AgentSet s = *this;
  for (size_t w = 0; w < words_.size(); ++w) s.words_[w] &= other.words_[w];
  return s;
}

AgentSet AgentSet::set_minus(const AgentSet& other) const {
  check_same_universe(*this, other);
  AgentSet s = *this;
  for (size_t w = 0; w < words_.size(); ++w) s.words_[w] &= ~other.words_[w];
  return s;
}

std::vector<int> AgentSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

std::uint64_t AgentSet::to_mask() const {
  if (n_ > 64) throw std::invalid_argument("AgentSet::to_mask: universe too large");
  return words_.empty() ? 0 : words_[0];
}

bool AgentSet::lex_less(const AgentSet& a, const AgentSet& b) {
  check_same_universe(a, b);
  // Find the lowest index where membership differs. If it belongs to `a`, the
  // lists diverge with a's element being smaller, so a < b unless b has no
  // element past that point -- and b cannot run out first here, because the
  // divergent element is a's. Symmetrically when it belongs to `b`, except
  // that a might simply be a prefix of b (then a < b).
  for (size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (!diff) continue;
    std::uint64_t low = diff & (~diff + 1);
    if (a.words_[w] & low) {
      // a owns the divergent element; a is smaller iff b still has members at
      // or beyond this point (otherwise b is a strict prefix of a).
      std::uint64_t rest = b.words_[w] & ~(low - 1);
      if (rest) return true;
      for (size_t w2 = w + 1; w2 < b.words_.size(); ++w2) {
        if (b.words_[w2]) return true;
      }
      return false;
    }
    // b owns the divergent element; a < b iff a has no members at or beyond it.
    std::uint64_t rest = a.words_[w] & ~(low - 1);
    if (rest) return false;
    for (size_t w2 = w + 1; w2 < a.words_.size(); ++w2) {
      if (a.words_[w2]) return false;
    }
    return true;
  }
  return false;  // equal
}

bool AgentSet::tie_less(const AgentSet& a, const AgentSet& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

std::string AgentSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int i) {
    if (!first) out += ", ";
    out += std::to_string(i);
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace contracts
