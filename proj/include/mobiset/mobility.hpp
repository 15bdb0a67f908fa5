#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mobiset/budget.hpp"
#include "mobiset/constructions.hpp"
#include "mobiset/exact_cover.hpp"
#include "mobiset/word_set.hpp"

namespace mobiset {

/// Both are 1-codes, they are disjoint, and their radius-1 neighbourhoods coincide.
[[nodiscard]] bool is_mobile_pair(const WordSet& m, const WordSet& alt);

/// The three equivalent characterisations of an extended mobile pair, each
/// evaluated on its own, plus the shared hypotheses.
struct EmsConditionReport {
  bool hypotheses_ok = false;  // disjoint 1-codes of one common parity
  bool cond_a = false;         // punctured at i: mobile and mutual alternatives
  bool cond_b = false;         // distance-2 graph of the union is n/2-regular
  bool cond_c = false;         // equal spherical neighbourhoods

  [[nodiscard]] bool all() const noexcept { return hypotheses_ok && cond_a && cond_b && cond_c; }
  [[nodiscard]] bool conditions_agree() const noexcept {
    return cond_a == cond_b && cond_b == cond_c;
  }
};

[[nodiscard]] EmsConditionReport ems_conditions(const WordSet& m, const WordSet& alt, int i);

/// Exact-cover instance whose solutions are the extended alternatives of `m`:
/// universe Ω*(m), one candidate per same-parity word w ∉ m with sphere(w) ⊆ Ω*(m).
/// Labels are word bit patterns.
[[nodiscard]] CoverInstance ems_cover_instance(const WordSet& m);
/// Universe Ω(m), candidates are balls of words w ∉ m with ball(w) ⊆ Ω(m).
[[nodiscard]] CoverInstance ms_cover_instance(const WordSet& m);

/// Extended alternatives of a nonempty uniform-parity 1-code. Throws
/// std::invalid_argument for anything else.
[[nodiscard]] std::vector<WordSet> find_alternative_ems(const WordSet& m,
                                                        std::size_t cap = kDefaultSolutionCap,
                                                        CoverStats* stats = nullptr);
/// Alternatives (in the radius-1 ball sense) of a nonempty 1-code.
[[nodiscard]] std::vector<WordSet> find_alternative_ms(const WordSet& m,
                                                       std::size_t cap = kDefaultSolutionCap,
                                                       CoverStats* stats = nullptr);

[[nodiscard]] bool is_mobile(const WordSet& m);
[[nodiscard]] bool is_ems(const WordSet& m);

/// Ω(M) = Ω(M ⊕ e_i), cross-checked against the punctured distance-2 graph test.
/// Throws std::invalid_argument if `m` is not a 1-code and std::logic_error if the
/// two criteria ever disagree.
[[nodiscard]] bool is_icomponent(const WordSet& m, int i);
[[nodiscard]] bool icomponent_by_definition(const WordSet& m, int i);
[[nodiscard]] bool icomponent_by_graph(const WordSet& m, int i);

struct SplitResult {
  std::optional<SetPair> split;     // (P, M \ P)
  std::uint64_t subsets_examined = 0;
  std::uint64_t verdicts_computed = 0;
  double elapsed_ms = 0.0;
};

/// Sweeps every nonempty proper subset P in Gray-code order looking for P and M∖P
/// both extended mobile. Throws BudgetExceeded when the budget runs out.
[[nodiscard]] SplitResult is_splittable_ems(const WordSet& m, Budget budget = {});
/// Same sweep with the (non-extended) mobility test.
[[nodiscard]] SplitResult is_splittable_ms(const WordSet& m, Budget budget = {});

struct ReducibilityWitness {
  int i = 0;
  int j = 0;
  bool c = false;           // constant value of x_i ⊕ x_j
  bool valid_split = false;
  bool degenerate = false;  // one side of the split is empty
  friend bool operator==(const ReducibilityWitness&, const ReducibilityWitness&) = default;
};

[[nodiscard]] std::vector<ReducibilityWitness> reducibility_witnesses(const WordSet& r);
[[nodiscard]] bool is_reducible_ems(const WordSet& r);

struct MinEmsResult {
  std::optional<int> cardinality;
  std::optional<SetPair> witness;  // a smallest e.m.s. containing 0 and its alternative
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

/// Smallest cardinality ≤ cap of a nonempty extended mobile set in E^n. Odd n has none.
///
/// Translation fixes 0 ∈ M. The search grows M and an alternative M' together: an
/// uncovered point of Ω*(M) ∖ Ω*(M') (or the reverse) forces one of at most n
/// candidate words into the other side. Each vertex of one side needs exactly n/2
/// distance-2 partners on the other, which bounds how many words are still required.
[[nodiscard]] MinEmsResult min_ems_cardinality(int n, int cap, Budget budget = {});

}  // namespace mobiset
