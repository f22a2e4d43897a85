// Instance construction: the two hidden-set lower-bound families, randomized
// generators for the test corpus, and their shared conventions.
//
// The families use exact rationals throughout (denominators n, sqrt(n) for
// square n, and n(n+2)) so their structural properties verify with zero
// tolerance. Generators are pure functions of (parameters, seed).
#pragma once

#include <cstdint>
#include <optional>

#include "contracts/contract.hpp"

namespace contracts {

/// Subadditive hidden-set family: cardinality base value 3 + 2k/sqrt(n) up to
/// n/2, then 4,5,6 + sqrt(n); the hidden set T (size n/2 + 1) gets +1; all
/// costs are 2/n. Requires n to be an even perfect square. When t_star is not
/// given it is drawn uniformly from the seed.
Instance gen_subadditive_lb(int n, std::optional<AgentSet> t_star = {},
                            std::uint64_t seed = 0);

/// XOS hidden-set family: base value 1 + 3k/n up to n/2, then 1/2 + 4k/n; the
/// hidden set T (size n/2 + 1) gets +1/n; all costs are 5/(n(n+2)). The
/// returned reward is the bumped-symmetric form carrying its explicit clause
/// witness (see bump_support_clauses), and the two representations agree on
/// every set. Requires even n.
Instance gen_xos_lb(int n, std::optional<AgentSet> t_star = {}, std::uint64_t seed = 0);

/// Random additive instance: values dyadic uniform (0,1], costs dyadic
/// uniform (0, f({i})] so the cheap-agent set is nonempty with constant
/// probability.
Instance gen_random_additive(int n, std::uint64_t seed);

/// Random coverage instance over a universe of m weighted elements; each
/// agent covers each element with probability 1/4. Monotone submodular by
/// construction.
Instance gen_random_coverage(int n, std::uint64_t seed, int universe_m);

/// Random explicit clause list: k clauses, weights 0 with probability 1/4 and
/// dyadic uniform (0,1] otherwise.
Instance gen_random_xos(int n, std::uint64_t seed, int clause_count);

}  // namespace contracts
