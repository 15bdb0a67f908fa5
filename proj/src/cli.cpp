#include "mobiset/cli.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mobiset/budget.hpp"
#include "mobiset/constructions.hpp"
#include "mobiset/dist_graph.hpp"
#include "mobiset/hamming.hpp"
#include "mobiset/mobility.hpp"
#include "mobiset/sampling.hpp"
#include "mobiset/symmetry.hpp"
#include "mobiset/word_list.hpp"

namespace mobiset::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Invalid flags or parameters; maps to kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two inputs of different dimension; maps to kDimensionMismatch.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string kind;
  std::optional<int> k, m, r, index, coord, n;
  std::string input, alt, output;
  std::optional<std::size_t> cap;
  std::optional<double> budget_seconds;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool timing = false;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

WordSet load(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string("missing required flag ") + flag);
  return read_word_list(path);
}

void same_dimension(const WordSet& a, const WordSet& b) {
  if (a.dimension() != b.dimension()) {
    throw MismatchError("inputs live in E^" + std::to_string(a.dimension()) + " and E^" +
                        std::to_string(b.dimension()));
  }
}

Budget budget_of(const Options& o) {
  return o.budget_seconds ? Budget::of_seconds(*o.budget_seconds) : Budget::unlimited();
}

Json word_array(const WordSet& s) {
  Json a = Json::array();
  for (const auto& w : s) a.push_back(w.to_string());
  return a;
}

class Report {
 public:
  Report(const Options& o, std::optional<int> n)
      : timing_(o.timing), start_(std::chrono::steady_clock::now()) {
    j_["check"] = o.command + "/" + o.kind;
    j_["n"] = n ? Json(*n) : Json(nullptr);
    j_["cardinalities"] = Json::array();
  }

  void cardinality(std::size_t c) { j_["cardinalities"].push_back(c); }
  void verdict(bool v) { j_["verdict"] = v; }
  template <typename T>
  void result(const T& v) { j_["result"] = v; }
  void result_none() { j_["result"] = nullptr; }
  Json& details() {
    if (!j_.contains("details")) j_["details"] = Json::object();
    return j_["details"];
  }
  void witness(const std::string& name, const WordSet& s) {
    if (!j_.contains("witnesses")) j_["witnesses"] = Json::object();
    j_["witnesses"][name] = word_array(s);
  }
  void nodes(std::uint64_t v) { j_["nodes"] = v; }
  void solutions(std::uint64_t v) { j_["solutions"] = v; }
  void status(const std::string& s) { j_["status"] = s; }

  void print(std::ostream& out, bool json) {
    if (timing_) {
      j_["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    if (json) {
      out << j_.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : j_.items()) {
      if (key == "witnesses") {
        for (const auto& [name, words] : value.items()) {
          out << "witness " << name << ": " << words.size() << " words\n";
          for (const auto& w : words) out << "  " << w.get<std::string>() << '\n';
        }
        continue;
      }
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }

 private:
  Json j_;
  bool timing_;
  std::chrono::steady_clock::time_point start_;
};

Json condition_json(const EmsConditionReport& r) {
  return Json{{"hypotheses_ok", r.hypotheses_ok},
              {"cond_a", r.cond_a},
              {"cond_b", r.cond_b},
              {"cond_c", r.cond_c}};
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

struct Constructed {
  WordSet set;
  std::optional<WordSet> alternative;
  std::vector<std::pair<std::string, WordSet>> extra_parts;  // icomp-split
};

Constructed build(const Options& o) {
  const std::string& kind = o.kind;
  if (kind == "linear") {
    auto p = linear_ms(need(o.m, "--m"));
    return {p.first, p.second, {}};
  }
  if (kind == "linear-ems") {
    auto p = linear_ems_iterated_pair(need(o.m, "--m"));
    return {p.first, p.second, {}};
  }
  if (kind == "standard") {
    const int k = need(o.k, "--k");
    const int idx = o.index.value_or(0);
    if (idx < 0 || idx > 2) throw UsageError("--index must be 0, 1 or 2");
    auto parts = standard_partition(k);
    return {parts[static_cast<std::size_t>(idx)], parts[static_cast<std::size_t>((idx + 1) % 3)], {}};
  }
  if (kind == "theorem") {
    const int k = need(o.k, "--k");
    auto parts = standard_partition(k);
    return {theorem_ms(k), puncture(parts[1]), {}};
  }
  if (kind == "hamming") {
    const WordSet code = hamming_code(need(o.r, "--r"));
    auto p = perfect_pair(code, o.coord.value_or(0));
    return {p.first, p.second, {}};
  }
  if (kind == "grid36") {
    auto p = grid36();
    return {p.first, p.second, {}};
  }
  if (kind == "extend") {
    const int odd = o.index.value_or(0);
    if (odd != 0 && odd != 1) throw UsageError("--index selects the check-bit parity: 0 or 1");
    return {extend(load(o.input, "--input"), odd == 1), std::nullopt, {}};
  }
  if (kind == "puncture") {
    const WordSet s = load(o.input, "--input");
    return {puncture(s, o.coord.value_or(s.dimension() - 1)), std::nullopt, {}};
  }
  if (kind == "lift") {
    const WordSet m = load(o.input, "--input");
    const WordSet a = load(o.alt, "--alt");
    same_dimension(m, a);
    auto p = linear_extension_verified(m, a);
    return {p.first, p.second, {}};
  }
  if (kind == "icomp-build") {
    const WordSet m = load(o.input, "--input");
    const WordSet a = load(o.alt, "--alt");
    same_dimension(m, a);
    return {icomponent_from_pair(m, a), std::nullopt, {}};
  }
  if (kind == "icomp-split") {
    const WordSet m = load(o.input, "--input");
    const auto parts = pair_from_icomponent(m);
    Constructed c{parts.parts[0][0], parts.parts[0][1], {}};
    c.extra_parts.emplace_back("a1b0", parts.parts[1][0]);
    c.extra_parts.emplace_back("a1b1", parts.parts[1][1]);
    return c;
  }
  throw UsageError("unknown construct kind '" + kind + "'");
}

int construct(const Options& o, std::ostream& out, std::ostream& err) {
  const Constructed c = build(o);
  Report report(o, c.set.dimension());
  report.cardinality(c.set.size());
  if (c.alternative) report.cardinality(c.alternative->size());
  for (const auto& [name, part] : c.extra_parts) report.cardinality(part.size());

  if (o.output.empty()) {
    out << serialize_word_list(c.set);
    report.print(err, o.json);
    return kTrue;
  }
  write_word_list(o.output, c.set);
  Json files = Json::array({o.output});
  if (c.alternative) {
    write_word_list(o.output + ".alt", *c.alternative);
    files.push_back(o.output + ".alt");
  }
  for (const auto& [name, part] : c.extra_parts) {
    write_word_list(o.output + "." + name, part);
    files.push_back(o.output + "." + name);
  }
  report.details()["files"] = files;
  report.print(out, o.json);
  return kTrue;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int verify(const Options& o, std::ostream& out) {
  const std::string& kind = o.kind;
  if (kind == "onecode") {
    const WordSet s = load(o.input, "--input");
    Report report(o, s.dimension());
    report.cardinality(s.size());
    const bool v = is_one_code(s);
    report.verdict(v);
    report.details()["minimum_distance"] = minimum_distance(s);
    report.print(out, o.json);
    return v ? kTrue : kFalse;
  }
  if (kind == "pair") {
    const WordSet m = load(o.input, "--input");
    const WordSet a = load(o.alt, "--alt");
    same_dimension(m, a);
    Report report(o, m.dimension());
    report.cardinality(m.size());
    report.cardinality(a.size());
    const bool v = is_mobile_pair(m, a);
    report.verdict(v);
    auto& d = report.details();
    d["one_code_input"] = is_one_code(m);
    d["one_code_alt"] = is_one_code(a);
    d["disjoint"] = disjoint(m, a);
    d["equal_neighborhood"] = neighborhood(m) == neighborhood(a);
    report.print(out, o.json);
    return v ? kTrue : kFalse;
  }
  if (kind == "ems-pair") {
    const WordSet m = load(o.input, "--input");
    const WordSet a = load(o.alt, "--alt");
    same_dimension(m, a);
    const int i = o.coord.value_or(m.dimension() - 1);
    const auto r = ems_conditions(m, a, i);
    Report report(o, m.dimension());
    report.cardinality(m.size());
    report.cardinality(a.size());
    report.verdict(r.all());
    report.details() = condition_json(r);
    report.details()["coord"] = i;
    report.print(out, o.json);
    return r.all() ? kTrue : kFalse;
  }
  if (kind == "icomp") {
    const WordSet m = load(o.input, "--input");
    const int i = o.coord.value_or(m.dimension() - 1);
    Report report(o, m.dimension());
    report.cardinality(m.size());
    const bool v = is_icomponent(m, i);
    report.verdict(v);
    report.details()["coord"] = i;
    report.details()["by_definition"] = icomponent_by_definition(m, i);
    report.details()["by_graph"] = icomponent_by_graph(m, i);
    report.print(out, o.json);
    return v ? kTrue : kFalse;
  }
  if (kind == "claim1") {
    const int k = need(o.k, "--k");
    const auto parts = standard_partition(k);
    Report report(o, 4 * k);
    bool all = true;
    Json pairs = Json::array();
    for (std::size_t a = 0; a < 3; ++a) {
      report.cardinality(parts[a].size());
      for (std::size_t b = a + 1; b < 3; ++b) {
        const DistGraph g = distance_graph(set_union(parts[a], parts[b]), 2);
        const bool bip = has_bipartition(g, parts[a], parts[b]) && is_bipartite(g);
        const bool reg = is_regular(g, static_cast<std::size_t>(2 * k));
        all = all && bip && reg;
        pairs.push_back(Json{{"i", a}, {"j", b}, {"bipartite", bip}, {"regular_degree", 2 * k}, {"regular", reg}});
      }
    }
    Json edgeless = Json::array();
    for (std::size_t a = 0; a < 3; ++a) {
      const bool e = distance_graph(parts[a], 2).edge_count() == 0;
      all = all && e;
      edgeless.push_back(e);
    }
    report.verdict(all);
    report.details()["pairs"] = pairs;
    report.details()["edgeless"] = edgeless;
    report.print(out, o.json);
    return all ? kTrue : kFalse;
  }
  if (kind == "agreement") {
    const int n = need(o.n, "--n");
    if (n < 2 || n % 2 != 0 || n > 16) throw UsageError("--n must be even, between 2 and 16");
    const std::size_t samples = o.cap.value_or(1000);
    Rng rng(o.seed);
    std::size_t agree = 0;
    std::size_t positive = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const auto p = sample_hypothesis_pair(n, rng);
      const auto r = ems_conditions(p.first, p.second, static_cast<int>(rng() % static_cast<unsigned>(n)));
      if (r.hypotheses_ok && r.conditions_agree()) ++agree;
      if (r.all()) ++positive;
    }
    Report report(o, n);
    const bool v = agree == samples;
    report.verdict(v);
    report.details()["seed"] = o.seed;
    report.details()["samples"] = samples;
    report.details()["agreeing"] = agree;
    report.details()["all_true"] = positive;
    report.print(out, o.json);
    return v ? kTrue : kFalse;
  }
  throw UsageError("unknown verify kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int analyze(const Options& o, std::ostream& out) {
  const std::string& kind = o.kind;
  if (kind == "rank") {
    const WordSet s = load(o.input, "--input");
    Report report(o, s.dimension());
    report.cardinality(s.size());
    const int rank = affine_rank(s);
    report.result(rank);
    report.details()["full_rank"] = rank == s.dimension();
    report.print(out, o.json);
    return kTrue;
  }
  if (kind == "alternative") {
    const WordSet s = load(o.input, "--input");
    const bool extended = s.dimension() % 2 == 0;
    CoverStats stats;
    const std::size_t cap = o.cap.value_or(kDefaultSolutionCap);
    const auto alts = extended ? find_alternative_ems(s, cap, &stats) : find_alternative_ms(s, cap, &stats);
    Report report(o, s.dimension());
    report.cardinality(s.size());
    report.result(alts.size());
    report.details()["extended"] = extended;
    bool verified = true;
    Json files = Json::array();
    for (std::size_t i = 0; i < alts.size(); ++i) {
      verified = verified && (extended ? ems_conditions(s, alts[i], s.dimension() - 1).all()
                                       : is_mobile_pair(s, alts[i]));
      report.witness("alternative_" + std::to_string(i + 1), alts[i]);
      if (!o.output.empty()) {
        const std::string path = o.output + "." + std::to_string(i + 1);
        write_word_list(path, alts[i]);
        files.push_back(path);
      }
    }
    report.details()["verified"] = verified;
    if (!o.output.empty()) report.details()["files"] = files;
    report.nodes(stats.nodes);
    report.solutions(stats.solutions);
    report.print(out, o.json);
    return alts.empty() ? kFalse : kTrue;
  }
  if (kind == "splittable") {
    const WordSet s = load(o.input, "--input");
    const bool extended = s.dimension() % 2 == 0;
    const auto r = extended ? is_splittable_ems(s, budget_of(o)) : is_splittable_ms(s, budget_of(o));
    Report report(o, s.dimension());
    report.cardinality(s.size());
    report.verdict(r.split.has_value());
    report.details()["extended"] = extended;
    report.details()["verdicts_computed"] = r.verdicts_computed;
    if (r.split) {
      report.witness("part", r.split->first);
      report.witness("rest", r.split->second);
    }
    report.nodes(r.subsets_examined);
    report.print(out, o.json);
    return r.split ? kTrue : kFalse;
  }
  if (kind == "reducible") {
    WordSet s = load(o.input, "--input");
    Report report(o, s.dimension());
    report.cardinality(s.size());
    const bool extended_input = s.dimension() % 2 == 1;
    if (extended_input) s = extend(s, false);
    const auto ws = reducibility_witnesses(s);
    const bool v = std::any_of(ws.begin(), ws.end(), [](const auto& w) { return w.valid_split; });
    report.verdict(v);
    report.details()["extended_before_test"] = extended_input;
    Json list = Json::array();
    for (const auto& w : ws) {
      list.push_back(Json{{"i", w.i}, {"j", w.j}, {"c", w.c ? 1 : 0}, {"valid_split", w.valid_split},
                          {"degenerate", w.degenerate}});
    }
    report.details()["witnesses"] = list;
    report.print(out, o.json);
    return v ? kTrue : kFalse;
  }
  if (kind == "transitive") {
    const WordSet s = load(o.input, "--input");
    const auto r = transitivity(s, budget_of(o));
    Report report(o, s.dimension());
    report.cardinality(s.size());
    report.verdict(r.transitive);
    report.details()["stabilizer_order"] = r.stabilizer_order;
    report.details()["orbit_size"] = r.orbit.size();
    report.print(out, o.json);
    return r.transitive ? kTrue : kFalse;
  }
  if (kind == "min-ems") {
    const int n = need(o.n, "--n");
    const auto cap = static_cast<int>(o.cap.value_or(static_cast<std::size_t>(n + 2)));
    const auto r = min_ems_cardinality(n, cap, budget_of(o));
    Report report(o, n);
    if (r.cardinality) {
      report.result(*r.cardinality);
      report.witness("ems", r.witness->first);
      report.witness("alternative", r.witness->second);
    } else {
      report.result_none();
    }
    report.details()["cap"] = cap;
    report.nodes(r.nodes);
    report.print(out, o.json);
    return r.cardinality ? kTrue : kFalse;
  }
  throw UsageError("unknown analyze kind '" + kind + "'");
}

void add_flags(CLI::App* sub, Options& o) {
  sub->add_option("kind", o.kind, "what to construct, verify or analyze")->required();
  sub->add_option("--k", o.k, "number of coordinate quadruples");
  sub->add_option("--m", o.m, "half-dimension of the linear family");
  sub->add_option("--r", o.r, "Hamming code redundancy");
  sub->add_option("--n", o.n, "hypercube dimension");
  sub->add_option("--index", o.index, "index class (standard) or parity bit (extend)");
  sub->add_option("--coord", o.coord, "0-based coordinate");
  sub->add_option("--input", o.input, "word-list file");
  sub->add_option("--alt", o.alt, "alternative word-list file");
  sub->add_option("--output", o.output, "output path (or prefix)");
  sub->add_option("--cap", o.cap, "solution cap / size cap / sample count");
  sub->add_option("--budget", o.budget_seconds, "wall-clock budget in seconds");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_flag("--json", o.json, "print the report as JSON");
  sub->add_flag("--timing", o.timing, "include elapsed_ms in the report");
}

int dispatch(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.command == "construct") return construct(o, out, err);
  if (o.command == "verify") return verify(o, out);
  return analyze(o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Mobile sets in the binary hypercube", "mobiset"};
  app.require_subcommand(1);
  for (const char* name : {"construct", "verify", "analyze"}) {
    auto* sub = app.add_subcommand(name);
    add_flags(sub, o);
    sub->callback([&o, name] { o.command = name; });
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "mobiset: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return dispatch(o, out, err);
  } catch (const BudgetExceeded& e) {
    Report report(o, std::nullopt);
    report.status("budget_exceeded");
    report.nodes(e.nodes());
    report.print(out, o.json);
    err << "mobiset: " << e.what() << '\n';
    return kBudget;
  } catch (const MismatchError& e) {
    err << "mobiset: dimension mismatch: " << e.what() << '\n';
    return kDimensionMismatch;
  } catch (const std::exception& e) {
    err << "mobiset: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace mobiset::cli
