#include "contracts/instance_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace contracts {

namespace {

std::string join_numbers(const std::vector<Rat>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += format_number(xs[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  std::string out{kInstanceHeader};
  out += '\n';
  out += "n = " + std::to_string(inst.agents()) + '\n';
  out += "costs = " + join_numbers(inst.costs) + '\n';
  out += "reward.kind = ";
  out += reward_kind_name(inst.f.kind());
  out += '\n';
  switch (inst.f.kind()) {
    case RewardKind::kAdditive:
      out += "reward.values = " + join_numbers(inst.f.additive_data()->values) + '\n';
      break;
    case RewardKind::kXosClauses:
      for (const auto& clause : inst.f.xos_data()->clauses) {
        out += "reward.clause = " + join_numbers(clause) + '\n';
      }
      break;
    case RewardKind::kCoverage: {
      const CoverageData& d = *inst.f.coverage_data();
      out += "reward.universe = " + std::to_string(d.universe) + '\n';
      out += "reward.weights = " + join_numbers(d.weights) + '\n';
      for (int a = 0; a < d.n; ++a) {
        std::vector<int> elems;
        for (int e = 0; e < d.universe; ++e) {
          if (d.cover[a][e / 64] >> (e % 64) & 1) elems.push_back(e);
        }
        out += "reward.cover = " + join_ints(elems) + '\n';
      }
      break;
    }
    case RewardKind::kSymmetricTable:
      out += "reward.table = " + join_numbers(inst.f.symmetric_data()->by_card) + '\n';
      break;
    case RewardKind::kBumpedSymmetric: {
      const BumpedData& d = *inst.f.bumped_data();
      out += "reward.table = " + join_numbers(d.base.by_card) + '\n';
      out += "reward.bump-set = " + join_ints(d.bump_set.members()) + '\n';
      out += "reward.bump = " + format_number(d.bump) + '\n';
      if (d.has_bump_support_clauses) out += "reward.clause-witness = bump-support\n";
      break;
    }
    case RewardKind::kTable:
      out += "reward.subset-values = " + join_numbers(inst.f.table_data()->by_mask) + '\n';
      break;
  }
  if (!inst.meta.family.empty()) out += "meta.family = " + inst.meta.family + '\n';
  if (inst.meta.seed) out += "meta.seed = " + std::to_string(*inst.meta.seed) + '\n';
  if (inst.meta.t_star) out += "meta.t-star = " + join_ints(inst.meta.t_star->members()) + '\n';
  if (!inst.meta.note.empty()) out += "meta.note = " + inst.meta.note + '\n';
  for (const std::string& w : inst.meta.warnings) out += "meta.warning = " + w + '\n';
  return out;
}

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

struct Document {
  std::map<std::string, std::vector<Entry>> entries;

  Entry* find_one(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end()) return nullptr;
    if (it->second.size() > 1) {
      throw ParseError(it->second[1].line, "duplicate key '" + key + "'");
    }
    it->second[0].used = true;
    return &it->second[0];
  }

  Entry& require_one(const std::string& key) {
    Entry* e = find_one(key);
    if (!e) throw ParseError(0, "missing required key '" + key + "'");
    return *e;
  }

  std::vector<Entry>* find_repeated(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end()) return nullptr;
    for (Entry& e : it->second) e.used = true;
    return &it->second;
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<Rat> parse_numbers(const Entry& e, int expect = -1) {
  std::vector<std::string> toks = split_ws(e.value);
  if (expect >= 0 && static_cast<int>(toks.size()) != expect) {
    throw ParseError(e.line, "expected " + std::to_string(expect) + " numbers, got " +
                                 std::to_string(toks.size()));
  }
  std::vector<Rat> out;
  out.reserve(toks.size());
  for (const std::string& t : toks) {
    try {
      out.push_back(parse_number(t));
    } catch (const std::invalid_argument& err) {
      throw ParseError(e.line, err.what());
    }
  }
  return out;
}

std::vector<int> parse_indices(const Entry& e, int n) {
  std::vector<int> out;
  for (const std::string& t : split_ws(e.value)) {
    try {
      size_t pos = 0;
      int v = std::stoi(t, &pos);
      if (pos != t.size()) throw std::invalid_argument(t);
      if (v < 0 || v >= n) throw ParseError(e.line, "index " + t + " out of range");
      out.push_back(v);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(e.line, "bad index '" + t + "'");
    }
  }
  return out;
}

long long parse_int_entry(const Entry& e, const char* what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(e.value, &pos);
    if (pos != e.value.size()) throw std::invalid_argument(e.value);
    return v;
  } catch (const std::exception&) {
    throw ParseError(e.line, std::string("bad ") + what + " '" + e.value + "'");
  }
}

RewardFunction parse_reward(Document& doc, int n) {
  Entry& kind = doc.require_one("reward.kind");
  auto wrap = [&](auto&& build) -> RewardFunction {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& err) {
      throw ParseError(kind.line, err.what());
    }
  };
  if (kind.value == "additive") {
    std::vector<Rat> values = parse_numbers(doc.require_one("reward.values"), n);
    return wrap([&] { return RewardFunction::additive(std::move(values)); });
  }
  if (kind.value == "xos-clauses") {
    auto* rows = doc.find_repeated("reward.clause");
    if (!rows) throw ParseError(kind.line, "xos-clauses needs reward.clause lines");
    std::vector<std::vector<Rat>> clauses;
    for (const Entry& e : *rows) clauses.push_back(parse_numbers(e, n));
    return wrap([&] { return RewardFunction::xos(n, std::move(clauses)); });
  }
  if (kind.value == "coverage") {
    int universe =
        static_cast<int>(parse_int_entry(doc.require_one("reward.universe"), "universe size"));
    std::vector<Rat> weights = parse_numbers(doc.require_one("reward.weights"), universe);
    auto* rows = doc.find_repeated("reward.cover");
    if (!rows || static_cast<int>(rows->size()) != n) {
      throw ParseError(kind.line, "coverage needs one reward.cover line per agent");
    }
    std::vector<std::vector<int>> cover;
    for (const Entry& e : *rows) cover.push_back(parse_indices(e, universe));
    return wrap(
        [&] { return RewardFunction::coverage(n, universe, std::move(weights), cover); });
  }
  if (kind.value == "symmetric-table") {
    std::vector<Rat> table = parse_numbers(doc.require_one("reward.table"), n + 1);
    return wrap([&] { return RewardFunction::symmetric(std::move(table)); });
  }
  if (kind.value == "bumped-symmetric") {
    std::vector<Rat> table = parse_numbers(doc.require_one("reward.table"), n + 1);
    Entry& bump_set_e = doc.require_one("reward.bump-set");
    AgentSet bump_set = AgentSet::from_members(n, parse_indices(bump_set_e, n));
    Rat bump = parse_numbers(doc.require_one("reward.bump"), 1)[0];
    bool witness = false;
    if (Entry* w = doc.find_one("reward.clause-witness")) {
      if (w->value != "bump-support") throw ParseError(w->line, "unknown clause witness");
      witness = true;
    }
    return wrap([&] {
      return RewardFunction::bumped_symmetric(std::move(table), std::move(bump_set),
                                              std::move(bump), witness);
    });
  }
  if (kind.value == "table") {
    if (n > kTableKindMaxAgents) throw ParseError(kind.line, "table kind limited to 24 agents");
    Entry& e = doc.require_one("reward.subset-values");
    std::vector<Rat> values = parse_numbers(e, static_cast<int>(1u << n));
    return wrap([&] { return RewardFunction::table(n, std::move(values)); });
  }
  throw ParseError(kind.line, "unknown reward kind '" + kind.value + "'");
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line) || line != kInstanceHeader) {
    throw ParseError(1, "expected header '" + std::string(kInstanceHeader) + "'");
  }
  ++line_no;

  Document doc;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t");
      size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "empty key");
    doc.entries[key].push_back({value, line_no, false});
  }

  long long n_ll = parse_int_entry(doc.require_one("n"), "agent count");
  if (n_ll < 0 || n_ll > 1'000'000) throw ParseError(doc.require_one("n").line, "bad agent count");
  int n = static_cast<int>(n_ll);

  Entry& costs_e = doc.require_one("costs");
  std::vector<Rat> costs = parse_numbers(costs_e, n);
  for (const Rat& c : costs) {
    if (c < 0) throw ParseError(costs_e.line, "costs must be nonnegative");
  }

  RewardFunction f = parse_reward(doc, n);

  InstanceMeta meta;
  if (Entry* e = doc.find_one("meta.family")) meta.family = e->value;
  if (Entry* e = doc.find_one("meta.seed")) {
    meta.seed = static_cast<std::uint64_t>(parse_int_entry(*e, "seed"));
  }
  if (Entry* e = doc.find_one("meta.t-star")) {
    meta.t_star = AgentSet::from_members(n, parse_indices(*e, n));
  }
  if (Entry* e = doc.find_one("meta.note")) meta.note = e->value;
  if (auto* ws = doc.find_repeated("meta.warning")) {
    for (const Entry& e : *ws) meta.warnings.push_back(e.value);
  }

  for (const auto& [key, entries] : doc.entries) {
    for (const Entry& e : entries) {
      if (!e.used) throw ParseError(e.line, "unknown key '" + key + "'");
    }
  }

  try {
    return Instance::make(std::move(costs), std::move(f), std::move(meta));
  } catch (const std::exception& err) {
    throw ParseError(costs_e.line, err.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << serialize_instance(inst);
}

}  // namespace contracts
