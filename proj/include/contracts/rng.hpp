// Deterministic RNG used by generators and the bench harness.
//
// mt19937_64 is fully specified by the standard and the bounded draws below
// avoid std::uniform_int_distribution (whose output is implementation
// defined), so identical seeds give identical instances on any platform.
#pragma once

#include <cstdint>
#include <random>

#include "contracts/agent_set.hpp"

namespace contracts {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t u64() { return gen_(); }

  /// Uniform in [0, bound), bound > 0. Rejection sampling.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  bool chance(int num, int den) { return below(den) < static_cast<std::uint64_t>(num); }

  /// Dyadic rational k/2^bits in [0,1); exact as a double, so downstream sums
  /// and differences of generated values stay exact.
  double dyadic01(int bits = 20) {
    return static_cast<double>(below(std::uint64_t{1} << bits)) /
           static_cast<double>(std::uint64_t{1} << bits);
  }

  /// Dyadic rational in (0,1].
  double dyadic01_open(int bits = 20) {
    return static_cast<double>(below(std::uint64_t{1} << bits) + 1) /
           static_cast<double>(std::uint64_t{1} << bits);
  }

  /// Uniform size-k subset of {0..n-1} via partial Fisher-Yates.
  AgentSet subset_of_size(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    AgentSet out(n);
    for (int t = 0; t < k; ++t) {
      int j = t + below_int(n - t);
      std::swap(pool[t], pool[j]);
      out.add(pool[t]);
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace contracts
