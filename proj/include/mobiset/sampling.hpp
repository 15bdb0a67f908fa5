#pragma once

#include <cstdint>
#include <random>

#include "mobiset/constructions.hpp"
#include "mobiset/isometry.hpp"

namespace mobiset {

inline constexpr std::uint64_t kDefaultSeed = 20080101;

using Rng = std::mt19937_64;

[[nodiscard]] Isometry random_isometry(int n, Rng& rng);
/// An isometry whose translation part has even weight, so parity classes are kept.
[[nodiscard]] Isometry random_even_isometry(int n, Rng& rng);

/// Two disjoint 1-codes in E^n whose words all share one parity. Sizes are drawn
/// up to `max_size` each; the codes are grown greedily from random candidates.
[[nodiscard]] SetPair random_one_code_pair(int n, std::size_t max_size, Rng& rng);

/// Draws two disjoint 1-codes of one common parity in even dimension n ≥ 2: a third
/// are isometric images of a known extended mobile pair, a third are such images with
/// words removed, and a third come from random_one_code_pair.
[[nodiscard]] SetPair sample_hypothesis_pair(int n, Rng& rng);

}  // namespace mobiset
