#pragma once

#include <optional>
#include <vector>

#include "mobiset/budget.hpp"
#include "mobiset/isometry.hpp"

namespace mobiset {

/// All coordinate permutations π with π(a) = b, in lexicographic order of π.
/// Stops after `limit` results.
[[nodiscard]] std::vector<std::vector<int>> coordinate_permutations(const WordSet& a, const WordSet& b,
                                                                    std::size_t limit,
                                                                    BudgetMeter& meter);
[[nodiscard]] std::optional<std::vector<int>> find_coordinate_permutation(const WordSet& a,
                                                                          const WordSet& b,
                                                                          Budget budget = {});

/// Every isometry σ with σ(M) = M, sorted by (mask, perm). Throws BudgetExceeded.
[[nodiscard]] std::vector<Isometry> stabilizer(const WordSet& m, Budget budget = {});

/// Images of `x` under `group`, as a set.
[[nodiscard]] WordSet orbit(const Word& x, const std::vector<Isometry>& group);

struct TransitivityResult {
  bool transitive = false;
  std::size_t stabilizer_order = 0;
  WordSet orbit;  // orbit of the smallest word of M
};

[[nodiscard]] TransitivityResult transitivity(const WordSet& m, Budget budget = {});
[[nodiscard]] bool is_transitive(const WordSet& m, Budget budget = {});

}  // namespace mobiset
