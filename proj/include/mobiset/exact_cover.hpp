#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace mobiset {

using CoverElement = std::uint64_t;
using CoverLabel = std::uint64_t;

inline constexpr std::size_t kDefaultSolutionCap = 1'000'000;

struct CoverCandidate {
  CoverLabel label;
  std::vector<CoverElement> subset;
};

/// Universe plus labelled candidate subsets. Labels must be distinct and every subset
/// a nonempty part of the universe.
struct CoverInstance {
  std::vector<CoverElement> universe;
  std::vector<CoverCandidate> candidates;
};

struct CoverSolution {
  std::vector<CoverLabel> chosen;  // ascending
  friend bool operator==(const CoverSolution&, const CoverSolution&) = default;
};

struct CoverStats {
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
};

/// Algorithm X with dancing links. Branches on the universe element with the fewest
/// remaining candidates (ties go to the earlier element in universe order) and tries
/// candidates in ascending label order, so the solution sequence is deterministic.
[[nodiscard]] std::optional<CoverSolution> solve_first(const CoverInstance& inst,
                                                       CoverStats* stats = nullptr);
[[nodiscard]] std::vector<CoverSolution> solve_all(const CoverInstance& inst,
                                                   std::size_t cap = kDefaultSolutionCap,
                                                   CoverStats* stats = nullptr);

/// Post-hoc check: chosen subsets are pairwise disjoint and cover the universe exactly.
[[nodiscard]] bool is_exact_cover(const CoverInstance& inst, const CoverSolution& sol);

}  // namespace mobiset
