// Machinery for additive rewards: a (1-eps)-approximation scheme built on a
// rounded-value dynamic program, and the instance mapping of the PARTITION
// reduction.
#pragma once

#include <vector>

#include "contracts/contract.hpp"
#include "contracts/solve_report.hpp"

namespace contracts {

/// FPTAS for additive rewards: guesses b = max_{i in S*} f({i}) over all
/// singleton values, rounds values down to multiples of (eps/n) * b, and for
/// each grid level x finds the cheapest (by sum of c_i/f({i})) set reaching x
/// by dynamic programming. Returns a set with g >= (1 - eps) * g(S*).
///
/// Rounding and grid indices are computed in exact rationals so a value that
/// is a precise multiple of the grid never rounds to the wrong cell; the DP
/// costs themselves run in doubles.
///
/// Throws std::invalid_argument unless f is additive and 0 < eps < 1.
SolveReport fptas_additive(const Instance& inst, double epsilon, QueryCounter* qc = nullptr);

/// The additive instance of the number-partitioning reduction: values
/// v_i = w_i and costs c_i = w_i^2 / W with W = sum w_i. The weights form a
/// yes-instance of PARTITION exactly when the optimal principal utility
/// equals W/4.
Instance partition_instance(const std::vector<long long>& weights);

/// Grid cells per guess is ceil(n^2/eps); guard against runaway table sizes.
inline constexpr long long kFptasMaxGridCells = 50'000'000;

namespace detail {

/// The final DP row for one guess: entry x is the cheapest share-sum
/// (sum of c_i/f({i})) over subsets of `agents` whose rounded value reaches
/// grid level x. Exposed so the dynamic program can be validated against
/// direct enumeration.
std::vector<double> fptas_cheapest_share_row(const std::vector<int>& agents,
                                             const std::vector<Rat>& values,
                                             const std::vector<double>& cost_share,
                                             const Rat& delta_b, long long grid);

}  // namespace detail

}  // namespace contracts
