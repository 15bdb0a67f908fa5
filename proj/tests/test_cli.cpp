#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mobiset/cli.hpp"
#include "mobiset/constructions.hpp"
#include "mobiset/hamming.hpp"
#include "mobiset/mobility.hpp"
#include "mobiset/word_list.hpp"

using namespace mobiset;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code) {
  args.push_back("--json");
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == expected_code, r.err);
  return nlohmann::json::parse(r.out);
}

WordSet from_json(const nlohmann::json& words) {
  std::string text;
  for (const auto& w : words) text += w.get<std::string>() + "\n";
  return parse_word_list(text);
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / "mobiset_cli_test") {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  [[nodiscard]] std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const WordSet& s) const {
    write_word_list(path(name), s);
    return path(name);
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("construct writes the set and its alternative") {
  Scratch tmp;
  const auto j = run_json({"construct", "standard", "--k", "2", "--index", "0", "--output", tmp.path("s0")}, 0);
  CHECK(j["n"] == 8);
  CHECK(j["cardinalities"][0] == 12);
  CHECK(read_word_list(tmp.path("s0")) == standard_partition(2)[0]);
  CHECK(read_word_list(tmp.path("s0.alt")) == standard_partition(2)[1]);

  run_json({"construct", "grid36", "--output", tmp.path("g")}, 0);
  CHECK(read_word_list(tmp.path("g")).size() == 36);
  CHECK(read_word_list(tmp.path("g.alt")).size() == 36);

  run_json({"construct", "linear", "--m", "1", "--output", tmp.path("lin")}, 0);
  CHECK(read_word_list(tmp.path("lin")) == WordSet::parse({"000", "111"}));
  CHECK(read_word_list(tmp.path("lin.alt")) == WordSet::parse({"001", "110"}));
}

TEST_CASE("construct without --output prints the word list") {
  const Run r = run({"construct", "linear", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(parse_word_list(r.out) == WordSet::parse({"000", "111"}));
  CHECK(r.err.find("cardinalities") != std::string::npos);
}

TEST_CASE("every construction kind round-trips through files") {
  Scratch tmp;
  const std::string s0 = tmp.write("s0", standard_partition(2)[0]);
  const std::string s1 = tmp.write("s1", standard_partition(2)[1]);
  const std::string lin = tmp.write("lin", linear_ms(2).first);
  const std::string lin_alt = tmp.write("lin_alt", linear_ms(2).second);
  const std::vector<std::vector<std::string>> cases{
      {"linear", "--m", "3"},
      {"linear-ems", "--m", "2"},
      {"standard", "--k", "1", "--index", "2"},
      {"theorem", "--k", "2"},
      {"hamming", "--r", "3", "--coord", "4"},
      {"grid36"},
      {"extend", "--input", lin, "--index", "1"},
      {"puncture", "--input", s0},
      {"lift", "--input", s0, "--alt", s1},
      {"icomp-build", "--input", lin, "--alt", lin_alt},
  };
  for (const auto& c : cases) {
    std::vector<std::string> args{"construct"};
    args.insert(args.end(), c.begin(), c.end());
    args.insert(args.end(), {"--output", tmp.path("out")});
    const Run r = run(args);
    CAPTURE(c[0]);
    REQUIRE(r.code == 0);
    const WordSet back = read_word_list(tmp.path("out"));
    CHECK(parse_word_list(serialize_word_list(back)) == back);
  }
  CHECK(read_word_list(tmp.path("out")) == icomponent_from_pair(linear_ms(2).first, linear_ms(2).second));

  run_json({"construct", "icomp-split", "--input", tmp.path("out"), "--output", tmp.path("split")}, 0);
  CHECK(read_word_list(tmp.path("split")) == linear_ms(2).first);
  CHECK(read_word_list(tmp.path("split.alt")) == linear_ms(2).second);
  CHECK(read_word_list(tmp.path("split.a1b0")).empty());
  CHECK(read_word_list(tmp.path("split.a1b1")).empty());
}

TEST_CASE("verify") {
  Scratch tmp;
  const auto claim = run_json({"verify", "claim1", "--k", "2"}, 0);
  CHECK(claim["verdict"] == true);
  CHECK(claim["details"]["pairs"].size() == 3);

  const std::string a = tmp.write("a", linear_ms(1).first);
  const std::string b = tmp.write("b", linear_ms(1).second);
  CHECK(run_json({"verify", "pair", "--input", a, "--alt", b}, 0)["verdict"] == true);

  const std::string bad = tmp.write("bad", WordSet::parse({"000", "110"}));
  const auto oc = run_json({"verify", "onecode", "--input", bad}, 1);
  CHECK(oc["verdict"] == false);
  CHECK(oc["details"]["minimum_distance"] == 2);

  const std::string z = tmp.write("z", WordSet::parse({"0000"}));
  const std::string o = tmp.write("o", WordSet::parse({"1111"}));
  const auto ems = run_json({"verify", "ems-pair", "--input", z, "--alt", o}, 1);
  CHECK(ems["details"]["hypotheses_ok"] == true);
  CHECK(ems["details"]["cond_a"] == false);
  CHECK(ems["details"]["cond_b"] == false);
  CHECK(ems["details"]["cond_c"] == false);

  const std::string ic = tmp.write("ic", linear_ms(2).first);
  CHECK(run_json({"verify", "icomp", "--input", ic, "--coord", "4"}, 0)["verdict"] == true);

  const auto l1 = run_json({"verify", "agreement", "--n", "6", "--cap", "50"}, 0);
  CHECK(l1["details"]["agreeing"] == 50);
}

TEST_CASE("analyze") {
  Scratch tmp;
  const std::string g = tmp.write("g", grid36().first);
  CHECK(run_json({"analyze", "rank", "--input", g}, 0)["result"] == 9);

  const std::string s0 = tmp.write("s0", standard_partition(2)[0]);
  const auto red = run_json({"analyze", "reducible", "--input", s0}, 1);
  CHECK(red["verdict"] == false);
  CHECK(red["details"]["witnesses"].empty());

  const auto me = run_json({"analyze", "min-ems", "--n", "8", "--cap", "6"}, 1);
  CHECK(me["result"].is_null());
  const auto me4 = run_json({"analyze", "min-ems", "--n", "4", "--cap", "4"}, 0);
  CHECK(me4["result"] == 2);
  CHECK(is_ems(from_json(me4["witnesses"]["ems"])));

  const std::string three = tmp.write("three", WordSet::parse({"000", "111"}));
  const auto alt = run_json({"analyze", "alternative", "--input", three, "--output", tmp.path("alt")}, 0);
  CHECK(alt["result"] == 3);
  CHECK(alt["details"]["verified"] == true);
  for (int i = 1; i <= 3; ++i) {
    CHECK(is_mobile_pair(WordSet::parse({"000", "111"}), read_word_list(tmp.path("alt." + std::to_string(i)))));
  }

  const std::string h8 = tmp.write("h8", extend(hamming_code(3)));
  const auto sp = run_json({"analyze", "splittable", "--input", h8}, 0);
  CHECK(is_ems(from_json(sp["witnesses"]["part"])));
  CHECK(is_ems(from_json(sp["witnesses"]["rest"])));

  const std::string lin = tmp.write("lin", linear_ms(2).first);
  const auto tr = run_json({"analyze", "transitive", "--input", lin}, 0);
  CHECK(tr["details"]["orbit_size"] == 4);
}

TEST_CASE("exit codes for usage, budget and dimension errors") {
  Scratch tmp;
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"construct"}).code == cli::kUsage);
  CHECK(run({"construct", "nonsense"}).code == cli::kUsage);
  CHECK(run({"construct", "linear"}).code == cli::kUsage);
  CHECK(run({"construct", "linear", "--m", "x"}).code == cli::kUsage);
  CHECK(run({"verify", "onecode", "--input", tmp.path("missing")}).code == cli::kUsage);

  const std::string broken = tmp.path("broken");
  {
    std::ofstream f(broken);
    f << "0101\n01\n";
  }
  const Run parse = run({"verify", "onecode", "--input", broken});
  CHECK(parse.code == cli::kUsage);
  CHECK(parse.err.find("line 2") != std::string::npos);

  const std::string a = tmp.write("a", WordSet::parse({"00"}));
  const std::string b = tmp.write("b", WordSet::parse({"111"}));
  CHECK(run({"verify", "pair", "--input", a, "--alt", b}).code == cli::kDimensionMismatch);

  const auto budget = run_json({"analyze", "min-ems", "--n", "12", "--cap", "12", "--budget", "0.001"}, cli::kBudget);
  CHECK(budget["status"] == "budget_exceeded");
  CHECK(budget["n"].is_null());
}

TEST_CASE("reports are byte-identical across runs unless timing is requested") {
  const std::vector<std::string> args{"verify", "agreement", "--n", "8", "--cap", "40", "--seed", "5", "--json"};
  const Run first = run(args);
  const Run second = run(args);
  CHECK(first.out == second.out);
  CHECK(first.out.find("elapsed_ms") == std::string::npos);
  auto timed = args;
  timed.push_back("--timing");
  CHECK(run(timed).out.find("elapsed_ms") != std::string::npos);
}
