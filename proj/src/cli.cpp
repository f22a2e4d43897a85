#include "contracts/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "contracts/additive.hpp"
#include "contracts/approx.hpp"
#include "contracts/bench.hpp"
#include "contracts/instance_io.hpp"
#include "contracts/instances.hpp"
#include "contracts/rng.hpp"
#include "contracts/verify.hpp"

namespace contracts {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

// Brute force is attempted automatically for ratio reporting when the
// instance is enumerable at desk scale or structurally solvable.
std::optional<OptResult> try_reference_optimum(const Instance& inst) {
  try {
    return brute_force_opt(inst);
  } catch (const UnsupportedQueryError&) {
    return std::nullopt;
  }
}

void attach_reference(SolveReport& rep, const Instance& inst) {
  if (auto opt = try_reference_optimum(inst)) {
    rep.g_opt = opt->g_star;
    if (opt->g_star_exact.finite && opt->g_star_exact.value > 0) {
      ExactUtility g_alg = principal_utility_exact(inst, rep.chosen);
      rep.ratio = g_alg.finite ? to_double(g_alg.value / opt->g_star_exact.value) : 0.0;
    }
  }
}

std::string alpha_line(const SolveReport& rep) {
  std::string out;
  for (size_t i = 0; i < rep.alpha.size(); ++i) {
    if (i) out += ' ';
    out += format_double(rep.alpha[i]);
  }
  return out;
}

std::string members_line(const AgentSet& s) {
  std::string out;
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ' ';
    out += std::to_string(i);
    first = false;
  });
  return out;
}

void print_report_structured(const SolveReport& rep, int n, std::ostream& out) {
  out << "contract-report v1\n";
  out << "algorithm = " << rep.algorithm << "\n";
  out << "n = " << n << "\n";
  out << "chosen = " << members_line(rep.chosen) << "\n";
  out << "alpha = " << alpha_line(rep) << "\n";
  out << "g = " << format_double(rep.g) << "\n";
  if (rep.g_opt) out << "g-star = " << format_double(*rep.g_opt) << "\n";
  if (rep.ratio) out << "ratio = " << format_double(*rep.ratio) << "\n";
  out << "value-queries = " << rep.queries.value_queries << "\n";
  out << "demand-queries = " << rep.queries.demand_queries << "\n";
  out << "approx-demand-queries = " << rep.queries.approx_demand_queries << "\n";
  for (const CandidateRecord& c : rep.candidates) {
    out << "candidate = " << c.grid_index << " " << format_double(c.x_j) << " " << c.demand_size
        << " " << c.chosen_size << " " << format_double(c.g_value) << "\n";
  }
}

void print_report_text(const SolveReport& rep, std::ostream& out) {
  bool exact_opt = rep.algorithm == "brute";
  out << "algorithm: " << rep.algorithm << "\n";
  out << (exact_opt ? "S* = " : "S = ") << rep.chosen.to_string() << "\n";
  std::string alphas;
  rep.chosen.for_each([&](int i) {
    if (!alphas.empty()) alphas += ", ";
    alphas += std::to_string(i) + ": " + format_double(rep.alpha[i]);
  });
  out << "alpha = {" << alphas << "}\n";
  out << (exact_opt ? "g* = " : "g = ") << format_double(rep.g) << "\n";
  if (!exact_opt && rep.g_opt) {
    out << "g* = " << format_double(*rep.g_opt);
    if (rep.ratio) out << "  (ratio " << format_double(*rep.ratio) << ")";
    out << "\n";
  }
  out << "queries: value=" << rep.queries.value_queries
      << " demand=" << rep.queries.demand_queries
      << " approx-demand=" << rep.queries.approx_demand_queries << "\n";
  if (!rep.candidates.empty()) out << "grid candidates: " << rep.candidates.size() << "\n";
  out << "time: " << format_double(rep.wall_ms) << " ms\n";
}

int write_or_print(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write output file: " + out_path);
  }
  file << text;
  return kExitOk;
}

int cmd_solve(const std::string& alg, const std::string& in_path, const std::string& out_path,
              const std::string& format, double epsilon, double xi, std::ostream& out,
              std::ostream& err) {
  Instance inst = load_instance(in_path);
  SolveReport rep;
  try {
    if (alg == "brute") {
      QueryCounter qc;
      OptResult opt = brute_force_opt(inst, &qc);
      rep = finish_report("brute", inst, opt.s_star, qc);
      rep.g_opt = rep.g;
      rep.ratio = 1.0;
    } else if (alg == "fptas") {
      rep = fptas_additive(inst, epsilon);
    } else if (alg == "xos") {
      rep = approx_contract_xos(inst, {xi, 1.0});
    } else if (alg == "submod") {
      rep = approx_contract_submodular(inst, {xi, 0});
    } else if (alg == "single") {
      QueryCounter qc;
      auto [set, g] = best_single_agent(inst, &qc);
      (void)g;
      rep = finish_report("single", inst, set, qc);
    } else {
      err << "error: unknown algorithm '" << alg << "'\n";
      return kExitUsage;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedQueryError& e) {
    err << "error: algorithm '" << alg << "' cannot run on this representation: " << e.what()
        << "\n";
    return kExitUsage;
  }
  if (alg != "brute") attach_reference(rep, inst);
  if (format == "structured") {
    std::ostringstream buf;
    print_report_structured(rep, inst.agents(), buf);
    return write_or_print(buf.str(), out_path, out);
  }
  std::ostringstream buf;
  print_report_text(rep, buf);
  return write_or_print(buf.str(), out_path, out);
}

std::vector<long long> parse_weight_list(const std::string& csv) {
  std::vector<long long> weights;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    long long w = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad weight '" + tok + "'");
    weights.push_back(w);
  }
  return weights;
}

int cmd_generate(const std::string& family, int n, std::uint64_t seed, const std::string& weights,
                 int universe, int clauses, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  Instance inst = [&] {
    if (family == "subadditive-lb") return gen_subadditive_lb(n, {}, seed);
    if (family == "xos-lb") return gen_xos_lb(n, {}, seed);
    if (family == "partition") {
      if (weights.empty()) throw std::invalid_argument("partition needs --weights");
      return partition_instance(parse_weight_list(weights));
    }
    if (family == "random-additive") return gen_random_additive(n, seed);
    if (family == "random-coverage") {
      return gen_random_coverage(n, seed, universe > 0 ? universe : 3 * n);
    }
    if (family == "random-xos") return gen_random_xos(n, seed, clauses > 0 ? clauses : n / 2 + 2);
    throw std::invalid_argument("unknown family '" + family + "'");
  }();
  std::string text = serialize_instance(inst);
  int code = write_or_print(text, out_path, out);
  if (!out_path.empty()) {
    err << "wrote " << out_path << " (" << inst.agents() << " agents, "
        << reward_kind_name(inst.f.kind()) << ")\n";
  }
  return code;
}

void print_check(const char* name, const CheckResult& r, std::ostream& out) {
  out << name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checks << " checks)";
  if (!r.pass) {
    out << "\n  witness: " << r.detail;
    if (r.witness_a) out << "\n  S = " << r.witness_a->to_string();
    if (r.witness_b && !(r.witness_a && *r.witness_b == *r.witness_a)) {
      out << "\n  T = " << r.witness_b->to_string();
    }
  }
  out << "\n";
}

int cmd_verify(const std::string& check, const std::string& in_path, long long trials,
               std::uint64_t seed, std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(in_path);
  bool ok = true;
  if (check == "class") {
    for (FunctionClass cls : {FunctionClass::kMonotone, FunctionClass::kSubadditive,
                              FunctionClass::kSubmodular, FunctionClass::kXosSupported}) {
      try {
        CheckResult r = check_class(inst, cls);
        ok = ok && r.pass;
        print_check(function_class_name(cls), r, out);
      } catch (const UnsupportedQueryError& e) {
        out << function_class_name(cls) << ": skipped (" << e.what() << ")\n";
      }
    }
  } else if (check == "lemma21") {
    CheckResult r = check_marginal_sum_dominance(inst, trials, seed);
    ok = r.pass;
    print_check("marginal-sum dominance", r, out);
  } else if (check == "lemma32") {
    CheckResult r = check_sqrt_cost_bound(inst);
    ok = r.pass;
    print_check("sqrt-cost bound at the optimum", r, out);
  } else if (check == "lemma33") {
    CheckResult r = check_half_value_condition(inst);
    ok = r.pass;
    print_check("half-value condition", r, out);
  } else if (check == "scaling") {
    // Randomized trials of the scaling routine on this instance, each output
    // verified against both guarantees.
    Rng rng(seed);
    int n = inst.agents();
    long long ran = 0;
    for (long long t = 0; t < trials && ok; ++t) {
      AgentSet target(n);
      for (int i = 0; i < n; ++i) {
        if (rng.chance(1, 2)) target.add(i);
      }
      double f_t = inst.f.value(target);
      if (!(f_t > 0)) continue;
      ScalingParams params{f_t * rng.dyadic01(), rng.dyadic01_open()};
      AgentSet u = scale_set(inst.f, target, params);
      ScalingCheck sc = check_scaling_output(inst.f, target, params, u);
      ++ran;
      if (!sc.pass) {
        ok = false;
        out << "scaling: FAIL on T = " << target.to_string()
            << " psi = " << format_double(params.psi)
            << " delta = " << format_double(params.delta) << "\n  " << sc.detail << "\n";
      }
    }
    if (ok) out << "scaling: PASS (" << ran << " trials)\n";
  } else if (check == "lb-family") {
    LbFamilyReport rep = lb_family_report(inst);
    out << "family: " << rep.family << "\n";
    out << "hidden set: " << rep.hidden_set.to_string() << "\n";
    out << "g_T(T) = " << format_fraction(rep.hidden_utility) << "\n";
    out << "max-other = "
        << (rep.max_other.finite ? format_fraction(rep.max_other.value) : "-inf") << "\n";
    out << "separation cap " << format_fraction(rep.separation_cap) << ": "
        << (rep.separation_checked ? (rep.separation_ok ? "PASS" : "FAIL") : "not binding")
        << "\n";
    print_check(rep.family == "xos-lb" ? "clause support" : "subadditivity", rep.structure, out);
    if (rep.family == "subadditive-lb") {
      out << "sandwich factor = " << format_fraction(rep.sandwich_factor) << "\n";
      print_check("submodular envelope", rep.sandwich, out);
    }
    for (const std::string& note : rep.notes) out << "note: " << note << "\n";
    ok = rep.pass();
  } else {
    err << "error: unknown check '" << check << "'\n";
    return kExitUsage;
  }
  return ok ? kExitOk : kExitVerifyFail;
}

int cmd_bench(const BenchConfig& config, const std::string& out_path, const std::string& format,
              std::ostream& out) {
  BenchResult result = run_bench(config);
  std::string text = format == "text" ? format_bench_text(config, result)
                                      : format_bench_structured(config, result);
  return write_or_print(text, out_path, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"linear contract optimization for multi-agent rewards"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "run a solver on an instance file");
  std::string alg, in_path, out_path, format = "text";
  double epsilon = 0.1, xi = 1.01;
  solve->add_option("--alg", alg, "brute|fptas|xos|submod|single")->required();
  solve->add_option("--in", in_path, "instance file")->required();
  solve->add_option("--out", out_path, "write the report here instead of stdout");
  solve->add_option("--format", format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  solve->add_option("--epsilon", epsilon, "accuracy for fptas (default 0.1)");
  solve->add_option("--xi", xi, "grid ratio for xos/submod (default 1.01)");

  // generate
  auto* generate = app.add_subcommand("generate", "construct an instance file");
  std::string family, weights;
  int gen_n = 0, universe = 0, clauses = 0;
  std::uint64_t seed = 0;
  generate->add_option("--family", family,
                       "subadditive-lb|xos-lb|partition|random-additive|random-coverage|random-xos")
      ->required();
  generate->add_option("--n", gen_n, "agent count");
  generate->add_option("--seed", seed, "generator seed");
  generate->add_option("--weights", weights, "comma-separated weights (partition family)");
  generate->add_option("--m", universe, "coverage universe size");
  generate->add_option("--k", clauses, "clause count for random-xos");
  generate->add_option("--out", out_path, "output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run structural checks on an instance file");
  std::string check;
  long long trials = 1000;
  verify->add_option("--check", check, "class|lemma21|lemma32|lemma33|scaling|lb-family")
      ->required();
  verify->add_option("--in", in_path, "instance file")->required();
  verify->add_option("--trials", trials, "trial count for sampled checks");
  verify->add_option("--seed", seed, "seed for sampled checks");

  // bench
  auto* bench = app.add_subcommand("bench", "run an algorithm/instance grid");
  BenchConfig config;
  int seed_count = 1;
  std::uint64_t seed_start = 1;
  bench->add_option("--family", config.families, "instance families")->required();
  bench->add_option("--n", config.sizes, "agent counts")->required();
  bench->add_option("--alg", config.algorithms, "algorithms")->required();
  bench->add_option("--seeds", seed_count, "number of seeds");
  bench->add_option("--seed-start", seed_start, "first seed (default 1)");
  bench->add_option("--epsilon", config.epsilon, "fptas accuracy");
  bench->add_option("--xi", config.xi, "grid ratio");
  bench->add_option("--m", config.coverage_universe, "coverage universe size");
  bench->add_option("--k", config.xos_clause_count, "clause count for random-xos");
  bench->add_option("--out", out_path, "output path (default stdout)");
  bench->add_option("--format", format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(solve)) {
      return cmd_solve(alg, in_path, out_path, format, epsilon, xi, out, err);
    }
    if (app.got_subcommand(generate)) {
      return cmd_generate(family, gen_n, seed, weights, universe, clauses, out_path, out, err);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(check, in_path, trials, seed, out, err);
    }
    if (app.got_subcommand(bench)) {
      config.seed_count = seed_count;
      config.seed_start = seed_start;
      return cmd_bench(config, out_path, format, out);
    }
  } catch (const ParseError& e) {
    err << "instance error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedQueryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace contracts
