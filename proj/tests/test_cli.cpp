#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "contracts/cli.hpp"
#include "contracts/instance_io.hpp"
#include "contracts/instances.hpp"
#include "test_support.hpp"

using namespace contracts;
using namespace contracts::test;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path dir;
  TempDir() {
    dir = std::filesystem::temp_directory_path() /
          ("contracts-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
  }
  ~TempDir() { std::filesystem::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve: brute force on a file prints the optimum") {
  TempDir tmp;
  save_instance(additive_instance({2, 1, 1}, {1, 0.2, 0.2}), tmp.path("add3.inst"));

  RunResult r = cli({"solve", "--alg", "brute", "--in", tmp.path("add3.inst")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "S* = {1, 2}"));
  CHECK(contains(r.out, "g* = 1.2"));

  RunResult structured = cli({"solve", "--alg", "brute", "--in", tmp.path("add3.inst"),
                              "--format", "structured"});
  CHECK(structured.code == 0);
  CHECK(contains(structured.out, "contract-report v1"));
  CHECK(contains(structured.out, "chosen = 1 2"));
  CHECK(contains(structured.out, "g = 1.2"));
}

TEST_CASE("solve: every algorithm runs end to end from files") {
  TempDir tmp;
  save_instance(gen_random_coverage(8, 5, 20), tmp.path("cov.inst"));
  save_instance(additive_instance({2, 1, 1}, {1, 0.2, 0.2}), tmp.path("add3.inst"));

  for (const char* alg : {"brute", "xos", "submod", "single"}) {
    RunResult r = cli({"solve", "--alg", alg, "--in", tmp.path("cov.inst")});
    CHECK(r.code == 0);
  }
  RunResult fp = cli({"solve", "--alg", "fptas", "--epsilon", "0.1", "--in",
                      tmp.path("add3.inst")});
  CHECK(fp.code == 0);
  CHECK(contains(fp.out, "g = 1.2"));
}

TEST_CASE("solve: unsupported pairings and bad inputs exit 2 with diagnostics") {
  TempDir tmp;
  save_instance(gen_random_coverage(6, 5, 15), tmp.path("cov.inst"));

  RunResult r = cli({"solve", "--alg", "fptas", "--in", tmp.path("cov.inst")});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "fptas requires additive reward"));

  RunResult missing = cli({"solve", "--alg", "brute", "--in", tmp.path("nope.inst")});
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "cannot open"));

  RunResult unknown_alg = cli({"solve", "--alg", "magic", "--in", tmp.path("cov.inst")});
  CHECK(unknown_alg.code == 2);
  CHECK(contains(unknown_alg.err, "unknown algorithm"));

  RunResult unknown_flag = cli({"solve", "--walg", "brute"});
  CHECK(unknown_flag.code == 2);

  RunResult no_sub = cli({});
  CHECK(no_sub.code == 2);

  // oversized demand support for the exact-demand pipeline: an explicit
  // clause list where all 30 agents are cheap
  save_instance(Instance::make(std::vector<Rat>(30, Rat(1, 100)),
                               RewardFunction::xos(30, {std::vector<Rat>(30, Rat(1))})),
                tmp.path("big.inst"));
  RunResult big = cli({"solve", "--alg", "xos", "--in", tmp.path("big.inst")});
  CHECK(big.code == 2);
  CHECK(contains(big.err, "xos"));
}

TEST_CASE("generate then verify the hidden-set families") {
  TempDir tmp;
  RunResult gen = cli({"generate", "--family", "subadditive-lb", "--n", "16", "--seed", "0",
                       "--out", tmp.path("sub16.inst")});
  CHECK(gen.code == 0);

  RunResult ver = cli({"verify", "--check", "lb-family", "--in", tmp.path("sub16.inst")});
  CHECK(ver.code == 0);
  CHECK(contains(ver.out, "g_T(T) = 63/16"));
  CHECK(contains(ver.out, "max-other = 27/8"));
  CHECK(contains(ver.out, "subadditivity: PASS"));

  RunResult gen2 = cli({"generate", "--family", "xos-lb", "--n", "100", "--seed", "1", "--out",
                        tmp.path("xos100.inst")});
  CHECK(gen2.code == 0);
  RunResult ver2 = cli({"verify", "--check", "lb-family", "--in", tmp.path("xos100.inst")});
  CHECK(ver2.code == 0);
  CHECK(contains(ver2.out, "g_T(T) = 51/40"));
  CHECK(contains(ver2.out, "clause support: PASS"));

  RunResult bad = cli({"generate", "--family", "subadditive-lb", "--n", "15", "--out",
                       tmp.path("nope.inst")});
  CHECK(bad.code == 2);
}

TEST_CASE("generate partition instances from weights") {
  TempDir tmp;
  RunResult gen = cli({"generate", "--family", "partition", "--weights", "1,1,2", "--out",
                       tmp.path("part.inst")});
  CHECK(gen.code == 0);
  Instance inst = load_instance(tmp.path("part.inst"));
  CHECK(inst.costs == std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(1)});

  RunResult solved = cli({"solve", "--alg", "brute", "--in", tmp.path("part.inst")});
  CHECK(contains(solved.out, "g* = 1"));
}

TEST_CASE("verify: remaining checks and failure exit codes") {
  TempDir tmp;
  save_instance(gen_random_coverage(9, 7, 25), tmp.path("cov.inst"));
  for (const char* check : {"class", "lemma21", "lemma32", "lemma33"}) {
    RunResult r = cli({"verify", "--check", check, "--in", tmp.path("cov.inst")});
    CHECK(r.code == 0);
  }
  RunResult scaling = cli({"verify", "--check", "scaling", "--in", tmp.path("cov.inst"),
                           "--trials", "64", "--seed", "5"});
  CHECK(scaling.code == 0);
  CHECK(contains(scaling.out, "PASS"));

  // the supermodular pair fails the marginal-sum check with a witness
  save_instance(Instance::make({Rat(0), Rat(0)}, supermodular_pair()), tmp.path("super.inst"));
  RunResult fail = cli({"verify", "--check", "lemma21", "--in", tmp.path("super.inst")});
  CHECK(fail.code == 1);
  CHECK(contains(fail.out, "FAIL"));
  CHECK(contains(fail.out, "witness"));

  RunResult unknown = cli({"verify", "--check", "lemma99", "--in", tmp.path("cov.inst")});
  CHECK(unknown.code == 2);
}

TEST_CASE("bench: deterministic structured output, failures identified") {
  TempDir tmp;
  std::vector<std::string> args = {"bench",  "--family", "random-coverage", "--n",   "7",
                                   "--alg",  "submod",   "--alg",           "brute", "--seeds",
                                   "2",      "--format", "structured",      "--out", ""};
  args.back() = tmp.path("b1.txt");
  CHECK(cli(args).code == 0);
  args.back() = tmp.path("b2.txt");
  CHECK(cli(args).code == 0);

  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  CHECK(slurp(tmp.path("b1.txt")) == slurp(tmp.path("b2.txt")));
  CHECK(contains(slurp(tmp.path("b1.txt")), "contract-bench v1"));
  CHECK(contains(slurp(tmp.path("b1.txt")), "worst-ratio"));

  // fptas on a non-additive family aborts naming the row
  RunResult bad = cli({"bench", "--family", "random-coverage", "--n", "6", "--alg", "fptas",
                       "--seeds", "1"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "bench row failed"));
  CHECK(contains(bad.err, "random-coverage"));

  // missing required flags
  CHECK(cli({"bench", "--family", "random-coverage"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  RunResult r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "solve"));
}
