#include "contracts/bench.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "contracts/additive.hpp"
#include "contracts/approx.hpp"
#include "contracts/instances.hpp"
#include "contracts/rng.hpp"
#include "contracts/verify.hpp"

namespace contracts {

namespace {

int worker_count(size_t rows) {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (const char* env = std::getenv("CONTRACTS_WORKERS")) {
    int requested = std::atoi(env);
    if (requested >= 1) workers = requested;
  }
  return std::min<int>(workers, static_cast<int>(std::max<size_t>(rows, 1)));
}

SolveReport run_algorithm(const std::string& algorithm, const Instance& inst,
                          const BenchConfig& config) {
  if (algorithm == "brute") {
    QueryCounter qc;
    OptResult opt = brute_force_opt(inst, &qc);
    return finish_report("brute", inst, opt.s_star, qc);
  }
  if (algorithm == "fptas") return fptas_additive(inst, config.epsilon);
  if (algorithm == "xos") return approx_contract_xos(inst, {config.xi, 1.0});
  if (algorithm == "submod") return approx_contract_submodular(inst, {config.xi, 0});
  if (algorithm == "single") {
    QueryCounter qc;
    auto [set, g] = best_single_agent(inst, &qc);
    (void)g;
    return finish_report("single", inst, set, qc);
  }
  throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

}  // namespace

Instance bench_instance(const BenchConfig& config, const std::string& family, int n,
                        std::uint64_t seed) {
  if (family == "random-additive") return gen_random_additive(n, seed);
  if (family == "random-coverage") {
    int m = config.coverage_universe > 0 ? config.coverage_universe : 3 * n;
    return gen_random_coverage(n, seed, m);
  }
  if (family == "random-xos") {
    int k = config.xos_clause_count > 0 ? config.xos_clause_count : n / 2 + 2;
    return gen_random_xos(n, seed, k);
  }
  if (family == "subadditive-lb") return gen_subadditive_lb(n, {}, seed);
  if (family == "xos-lb") return gen_xos_lb(n, {}, seed);
  if (family == "partition") {
    // Random positive weights in 1..9, seeded.
    Rng rng(seed);
    std::vector<long long> weights(n);
    for (long long& w : weights) w = 1 + static_cast<long long>(rng.below(9));
    return partition_instance(weights);
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

BenchResult run_bench(const BenchConfig& config) {
  if (config.algorithms.empty()) throw std::invalid_argument("empty algorithm list");
  if (config.families.empty()) throw std::invalid_argument("empty family list");
  if (config.sizes.empty()) throw std::invalid_argument("empty size list");
  if (config.seed_count < 1) throw std::invalid_argument("need at least one seed");

  struct RowSpec {
    std::string family;
    int n;
    std::uint64_t seed;
    std::string algorithm;
  };
  std::vector<RowSpec> specs;
  for (const std::string& family : config.families) {
    for (int n : config.sizes) {
      for (int s = 0; s < config.seed_count; ++s) {
        for (const std::string& algorithm : config.algorithms) {
          specs.push_back({family, n, config.seed_start + static_cast<std::uint64_t>(s),
                           algorithm});
        }
      }
    }
  }

  BenchResult result;
  result.rows.resize(specs.size());
  std::vector<std::string> failures(specs.size());

  auto run_row = [&](size_t idx) {
    const RowSpec& spec = specs[idx];
    try {
      Instance inst = bench_instance(config, spec.family, spec.n, spec.seed);
      SolveReport rep = run_algorithm(spec.algorithm, inst, config);
      OptResult opt = brute_force_opt(inst);

      BenchRow row;
      row.family = spec.family;
      row.n = spec.n;
      row.seed = spec.seed;
      row.algorithm = spec.algorithm;
      row.g = rep.g;
      row.g_star = opt.g_star;
      if (opt.g_star_exact.finite && opt.g_star_exact.value > 0) {
        ExactUtility g_alg = principal_utility_exact(inst, rep.chosen);
        row.ratio = g_alg.finite ? to_double(g_alg.value / opt.g_star_exact.value) : 0.0;
      }
      row.value_queries = rep.queries.value_queries;
      row.demand_queries = rep.queries.demand_queries;
      row.approx_demand_queries = rep.queries.approx_demand_queries;
      row.wall_ms = rep.wall_ms;
      result.rows[idx] = std::move(row);
    } catch (const std::exception& err) {
      failures[idx] = err.what();
    }
  };

  int workers = worker_count(specs.size());
  if (workers <= 1) {
    for (size_t i = 0; i < specs.size(); ++i) run_row(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1)) run_row(i);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (size_t i = 0; i < specs.size(); ++i) {
    if (!failures[i].empty()) {
      const RowSpec& s = specs[i];
      throw std::runtime_error("bench row failed (family=" + s.family +
                               ", n=" + std::to_string(s.n) + ", seed=" + std::to_string(s.seed) +
                               ", alg=" + s.algorithm + "): " + failures[i]);
    }
  }

  std::map<std::pair<std::string, std::string>, double> worst;
  for (const BenchRow& row : result.rows) {
    if (!row.ratio) continue;
    auto key = std::make_pair(row.family, row.algorithm);
    auto it = worst.find(key);
    if (it == worst.end() || *row.ratio < it->second) worst[key] = *row.ratio;
  }
  for (const auto& [key, ratio] : worst) {
    result.worst_ratio.emplace_back(key.first + "/" + key.second, ratio);
  }
  return result;
}

namespace {

void append_config(std::string& out, const BenchConfig& config) {
  out += "families =";
  for (const auto& f : config.families) out += " " + f;
  out += "\nsizes =";
  for (int n : config.sizes) out += " " + std::to_string(n);
  out += "\nseeds = " + std::to_string(config.seed_start) + ".." +
         std::to_string(config.seed_start + config.seed_count - 1);
  out += "\nalgorithms =";
  for (const auto& a : config.algorithms) out += " " + a;
  out += "\nepsilon = " + format_double(config.epsilon);
  out += "\nxi = " + format_double(config.xi);
  out += "\n";
}

std::string row_core(const BenchRow& row) {
  std::string out;
  out += row.family + " n=" + std::to_string(row.n) + " seed=" + std::to_string(row.seed) +
         " alg=" + row.algorithm + " g=" + format_double(row.g) +
         " g*=" + format_double(row.g_star);
  out += " ratio=";
  out += row.ratio ? format_double(*row.ratio) : "-";
  out += " vq=" + std::to_string(row.value_queries) + " dq=" + std::to_string(row.demand_queries) +
         " adq=" + std::to_string(row.approx_demand_queries);
  return out;
}

void append_summary(std::string& out, const BenchResult& result) {
  for (const auto& [key, ratio] : result.worst_ratio) {
    out += "worst-ratio " + key + " = " + format_double(ratio) + "\n";
  }
}

}  // namespace

std::string format_bench_structured(const BenchConfig& config, const BenchResult& result) {
  std::string out{kBenchHeader};
  out += "\n";
  append_config(out, config);
  for (const BenchRow& row : result.rows) {
    out += "row: " + row_core(row) + "\n";
  }
  append_summary(out, result);
  return out;
}

std::string format_bench_text(const BenchConfig& config, const BenchResult& result) {
  std::string out = "bench (" + std::to_string(result.rows.size()) + " rows)\n";
  append_config(out, config);
  for (const BenchRow& row : result.rows) {
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << row.wall_ms;
    out += row_core(row) + " time=" + ms.str() + "ms\n";
  }
  append_summary(out, result);
  return out;
}

}  // namespace contracts
