// Benchmark harness: runs algorithm/instance grids against the brute-force
// optimum and reports per-run rows plus per-family worst-case ratios.
//
// Rows execute concurrently (CONTRACTS_WORKERS bounds the worker count) and
// the output ordering is canonicalized, so a (config, seed) pair always
// produces byte-identical structured output.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contracts/contract.hpp"

namespace contracts {

struct BenchConfig {
  std::vector<std::string> families;    // random-additive | random-coverage | random-xos |
                                        // subadditive-lb | xos-lb | partition
  std::vector<int> sizes;
  std::uint64_t seed_start = 1;
  int seed_count = 1;
  std::vector<std::string> algorithms;  // brute | fptas | xos | submod | single
  double epsilon = 0.1;
  double xi = 1.01;
  int coverage_universe = 0;  // 0: derived from n
  int xos_clause_count = 0;   // 0: derived from n
};

struct BenchRow {
  std::string family;
  int n = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  double g = 0;
  double g_star = 0;
  std::optional<double> ratio;  // exact-channel g/g*, present when g* > 0
  long long value_queries = 0;
  long long demand_queries = 0;
  long long approx_demand_queries = 0;
  double wall_ms = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  // (family, algorithm) -> worst observed ratio.
  std::vector<std::pair<std::string, double>> worst_ratio;
};

/// Builds the instance a bench row runs on; exposed so tests can pin rows.
Instance bench_instance(const BenchConfig& config, const std::string& family, int n,
                        std::uint64_t seed);

BenchResult run_bench(const BenchConfig& config);

/// Canonical structured report (no timing, deterministic bytes).
std::string format_bench_structured(const BenchConfig& config, const BenchResult& result);
/// Human-readable table including wall-clock times.
std::string format_bench_text(const BenchConfig& config, const BenchResult& result);

inline constexpr std::string_view kBenchHeader = "contract-bench v1";

}  // namespace contracts
