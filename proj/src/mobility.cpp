#include "mobiset/mobility.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "mobiset/dist_graph.hpp"
#include "mobiset/hamming.hpp"

namespace mobiset {

bool is_mobile_pair(const WordSet& m, const WordSet& alt) {
  require_same_dimension(m, alt);
  return is_one_code(m) && is_one_code(alt) && disjoint(m, alt) &&
         neighborhood(m) == neighborhood(alt);
}

EmsConditionReport ems_conditions(const WordSet& m, const WordSet& alt, int i) {
  require_same_dimension(m, alt);
  const int n = m.dimension();
  if (i < 0 || i >= n) throw DimensionError("coordinate " + std::to_string(i) + " outside E^" + std::to_string(n));

  EmsConditionReport report;
  const WordSet both = set_union(m, alt);
  report.hypotheses_ok = disjoint(m, alt) && is_one_code(m) && is_one_code(alt) &&
                         (both.empty() || uniform_parity(both).has_value());

  report.cond_a = is_mobile_pair(puncture(m, i, PunctureMode::permissive),
                                 puncture(alt, i, PunctureMode::permissive));
  report.cond_b = n % 2 == 0 && is_regular(distance_graph(both, 2), static_cast<std::size_t>(n / 2));
  report.cond_c = spherical_neighborhood(m) == spherical_neighborhood(alt);
  return report;
}

CoverInstance ems_cover_instance(const WordSet& m) {
  const int n = m.dimension();
  const WordSet universe = spherical_neighborhood(m);
  CoverInstance inst;
  inst.universe = universe.bits();
  std::unordered_set<std::uint64_t> tried;
  for (auto u : universe.bits()) {
    for (int j = 0; j < n; ++j) {
      const std::uint64_t w = u ^ (std::uint64_t{1} << j);
      if (m.contains_bits(w) || !tried.insert(w).second) continue;
      CoverCandidate cand{w, {}};
      bool fits = true;
      for (int l = 0; l < n && fits; ++l) {
        const std::uint64_t p = w ^ (std::uint64_t{1} << l);
        fits = universe.contains_bits(p);
        cand.subset.push_back(p);
      }
      if (fits) inst.candidates.push_back(std::move(cand));
    }
  }
  return inst;
}

CoverInstance ms_cover_instance(const WordSet& m) {
  const int n = m.dimension();
  const WordSet universe = neighborhood(m);
  CoverInstance inst;
  inst.universe = universe.bits();
  std::unordered_set<std::uint64_t> tried;
  auto consider = [&](std::uint64_t w) {
    if (m.contains_bits(w) || !tried.insert(w).second) return;
    CoverCandidate cand{w, {w}};
    if (!universe.contains_bits(w)) return;
    for (int l = 0; l < n; ++l) {
      const std::uint64_t p = w ^ (std::uint64_t{1} << l);
      if (!universe.contains_bits(p)) return;
      cand.subset.push_back(p);
    }
    inst.candidates.push_back(std::move(cand));
  };
  for (auto u : universe.bits()) {
    consider(u);
    for (int j = 0; j < n; ++j) consider(u ^ (std::uint64_t{1} << j));
  }
  return inst;
}

namespace {

std::vector<WordSet> solutions_to_sets(int n, const std::vector<CoverSolution>& sols) {
  std::vector<WordSet> out;
  out.reserve(sols.size());
  for (const auto& s : sols) {
    if (s.chosen.empty()) continue;  // only arises in E^0, where nothing is mobile
    out.emplace_back(n, s.chosen);
  }
  return out;
}

}  // namespace

std::vector<WordSet> find_alternative_ems(const WordSet& m, std::size_t cap, CoverStats* stats) {
  if (m.empty()) throw std::invalid_argument("alternative search needs a nonempty set");
  if (!is_one_code(m)) throw std::invalid_argument("alternative search needs a 1-code");
  if (!uniform_parity(m)) throw std::invalid_argument("extended alternative search needs uniform parity");
  return solutions_to_sets(m.dimension(), solve_all(ems_cover_instance(m), cap, stats));
}

std::vector<WordSet> find_alternative_ms(const WordSet& m, std::size_t cap, CoverStats* stats) {
  if (m.empty()) throw std::invalid_argument("alternative search needs a nonempty set");
  if (!is_one_code(m)) throw std::invalid_argument("alternative search needs a 1-code");
  return solutions_to_sets(m.dimension(), solve_all(ms_cover_instance(m), cap, stats));
}

bool is_mobile(const WordSet& m) { return !find_alternative_ms(m, 1).empty(); }

bool is_ems(const WordSet& m) { return !find_alternative_ems(m, 1).empty(); }

bool icomponent_by_definition(const WordSet& m, int i) {
  return neighborhood(m) == neighborhood(translate(m, Word::unit(m.dimension(), i)));
}

bool icomponent_by_graph(const WordSet& m, int i) {
  const int n = m.dimension();
  if (m.empty()) return true;
  if (n % 2 == 0) return false;
  const DistGraph g = distance_graph(puncture(m, i), 2);
  return is_regular(g, static_cast<std::size_t>((n - 1) / 2)) && is_bipartite(g);
}

bool is_icomponent(const WordSet& m, int i) {
  if (i < 0 || i >= m.dimension()) throw DimensionError("i-component coordinate out of range");
  if (!is_one_code(m)) throw std::invalid_argument("i-component test needs a 1-code");
  const bool by_def = icomponent_by_definition(m, i);
  const bool by_graph = icomponent_by_graph(m, i);
  if (by_def != by_graph) throw std::logic_error("i-component criteria disagree");
  return by_def;
}

namespace {

template <typename Predicate>
SplitResult split_sweep(const WordSet& m, Budget budget, Predicate&& is_mobile_kind) {
  const std::size_t count = m.size();
  if (count > 62) throw std::invalid_argument("split sweep supports at most 62 words");
  SplitResult result;
  BudgetMeter meter(budget, "split sweep");
  if (count < 2) return result;

  std::unordered_map<std::uint64_t, bool> memo;
  auto verdict = [&](std::uint64_t mask) {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    ++result.verdicts_computed;
    const bool v = is_mobile_kind(subset_by_mask(m, mask));
    memo.emplace(mask, v);
    return v;
  };

  const std::uint64_t full = (std::uint64_t{1} << count) - 1;
  for (std::uint64_t step = 1; step <= full; ++step) {
    const std::uint64_t subset = step ^ (step >> 1);
    if (subset == full) continue;
    meter.tick();
    ++result.subsets_examined;
    if (verdict(subset) && verdict(full ^ subset)) {
      result.split = SetPair{subset_by_mask(m, subset), subset_by_mask(m, full ^ subset)};
      break;
    }
  }
  result.elapsed_ms = meter.elapsed_ms();
  return result;
}

}  // namespace

SplitResult is_splittable_ems(const WordSet& m, Budget budget) {
  if (!is_one_code(m) || (!m.empty() && !uniform_parity(m))) {
    throw std::invalid_argument("split sweep needs a uniform-parity 1-code");
  }
  return split_sweep(m, budget, [](const WordSet& p) { return is_ems(p); });
}

SplitResult is_splittable_ms(const WordSet& m, Budget budget) {
  if (!is_one_code(m)) throw std::invalid_argument("split sweep needs a 1-code");
  return split_sweep(m, budget, [](const WordSet& p) { return is_mobile(p); });
}

std::vector<ReducibilityWitness> reducibility_witnesses(const WordSet& r) {
  if (r.empty()) throw std::invalid_argument("reducibility needs a nonempty set");
  const int n = r.dimension();
  std::vector<ReducibilityWitness> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto pair_sum = [&](std::uint64_t b) { return (((b >> i) ^ (b >> j)) & 1U) != 0; };
      const bool c = pair_sum(r.bits().front());
      if (!std::all_of(r.bits().begin(), r.bits().end(), [&](auto b) { return pair_sum(b) == c; })) {
        continue;
      }
      ReducibilityWitness w{i, j, c, false, false};
      std::vector<std::uint64_t> side0;
      std::vector<std::uint64_t> side1;
      for (auto b : r.bits()) {
        const std::uint64_t normalized = c ? b ^ (std::uint64_t{1} << j) : b;
        const std::uint64_t rest = delete_coordinate(delete_coordinate(normalized, j), i);
        ((normalized >> i) & 1U ? side1 : side0).push_back(rest);
      }
      const WordSet lower(n - 2, std::move(side0));
      const WordSet upper(n - 2, std::move(side1));
      if (!lower.empty() && !upper.empty()) {
        w.valid_split = n - 2 > 0 && ems_conditions(lower, upper, n - 3).all();
      } else {
        w.degenerate = true;
        const WordSet& side = lower.empty() ? upper : lower;
        w.valid_split = n - 2 > 0 && is_one_code(side) && is_ems(side);
      }
      out.push_back(w);
    }
  }
  return out;
}

bool is_reducible_ems(const WordSet& r) {
  const auto ws = reducibility_witnesses(r);
  return std::any_of(ws.begin(), ws.end(), [](const auto& w) { return w.valid_split; });
}

// ---------------------------------------------------------------------------
// Smallest extended mobile set
// ---------------------------------------------------------------------------

namespace {

class PairGrowth {
 public:
  PairGrowth(int n, int cap, BudgetMeter& meter)
      : n_(n), cap_(cap), meter_(meter), side_(std::size_t{1} << n, 0),
        cover_{std::vector<std::uint8_t>(std::size_t{1} << n, 0),
               std::vector<std::uint8_t>(std::size_t{1} << n, 0)} {}

  bool run() {
    add(0, 0);
    return search();
  }

  [[nodiscard]] SetPair pair() const {
    return {WordSet(n_, members_[0]), WordSet(n_, members_[1])};
  }

 private:
  // side 0 is M, side 1 is the alternative.
  void add(int side, std::uint64_t w) {
    side_[w] = static_cast<std::uint8_t>(side + 1);
    members_[side].push_back(w);
    for (int l = 0; l < n_; ++l) ++cover_[side][w ^ (std::uint64_t{1} << l)];
  }

  void remove(int side, std::uint64_t w) {
    side_[w] = 0;
    members_[side].pop_back();
    for (int l = 0; l < n_; ++l) --cover_[side][w ^ (std::uint64_t{1} << l)];
  }

  bool fits(int side, std::uint64_t w) const {
    if (side_[w] != 0) return false;
    for (int l = 0; l < n_; ++l) {
      if (cover_[side][w ^ (std::uint64_t{1} << l)] != 0) return false;
    }
    return true;
  }

  bool search() {
    meter_.tick();
    // Deficit points: covered by one side's spheres but not the other's.
    std::size_t deficit[2] = {0, 0};
    int best_side = -1;
    std::uint64_t best_point = 0;
    int best_options = n_ + 1;
    for (int from = 0; from < 2; ++from) {
      const int need = 1 - from;
      for (auto v : members_[from]) {
        for (int j = 0; j < n_; ++j) {
          const std::uint64_t u = v ^ (std::uint64_t{1} << j);
          if (cover_[need][u] != 0) continue;
          ++deficit[need];
          if (best_options == 0) continue;
          int options = 0;
          if (static_cast<int>(members_[need].size()) < cap_) {
            for (int l = 0; l < n_; ++l) options += fits(need, u ^ (std::uint64_t{1} << l)) ? 1 : 0;
          }
          if (options < best_options) {
            best_options = options;
            best_side = need;
            best_point = u;
          }
        }
      }
    }
    if (best_side < 0) return true;  // balanced: Ω*(M) = Ω*(M')
    if (best_options == 0) return false;
    const auto un = static_cast<std::size_t>(n_);
    for (int side = 0; side < 2; ++side) {
      const std::size_t needed = members_[side].size() + (deficit[side] + un - 1) / un;
      if (needed > static_cast<std::size_t>(cap_)) return false;
    }
    for (int l = 0; l < n_; ++l) {
      const std::uint64_t w = best_point ^ (std::uint64_t{1} << l);
      if (!fits(best_side, w)) continue;
      add(best_side, w);
      if (search()) return true;
      remove(best_side, w);
    }
    return false;
  }

  int n_;
  int cap_;
  BudgetMeter& meter_;
  std::vector<std::uint8_t> side_;
  std::vector<std::uint8_t> cover_[2];
  std::vector<std::uint64_t> members_[2];
};

}  // namespace

MinEmsResult min_ems_cardinality(int n, int cap, Budget budget) {
  if (n < 0) throw std::invalid_argument("dimension must be nonnegative");
  if (n > 24) throw DimensionError("exhaustive e.m.s. search supports n <= 24");
  MinEmsResult result;
  BudgetMeter meter(budget, "minimum e.m.s. search");
  if (n == 0 || n % 2 == 1) {
    result.elapsed_ms = meter.elapsed_ms();
    return result;
  }
  // Every vertex has n/2 partners on the other side, so no e.m.s. is smaller than n/2.
  for (int size = std::max(1, n / 2); size <= cap; ++size) {
    PairGrowth growth(n, size, meter);
    if (growth.run()) {
      SetPair found = growth.pair();
      if (!is_ems(found.first) || !ems_conditions(found.first, found.second, n - 1).all()) {
        throw std::logic_error("minimum e.m.s. search produced an invalid pair");
      }
      result.cardinality = static_cast<int>(found.first.size());
      result.witness = std::move(found);
      break;
    }
  }
  result.nodes = meter.nodes();
  result.elapsed_ms = meter.elapsed_ms();
  return result;
}

}  // namespace mobiset
