#pragma once

#include <optional>

#include "mobiset/word.hpp"
#include "mobiset/word_set.hpp"

namespace mobiset {

[[nodiscard]] int distance(const Word& u, const Word& v);

/// Coordinate sum modulo 2.
[[nodiscard]] bool parity(const Word& x) noexcept;

/// Words at distance exactly 1.
[[nodiscard]] WordSet sphere(const Word& x);
/// Words at distance at most 1.
[[nodiscard]] WordSet ball(const Word& x);

/// Union of the radius-1 balls centred at the words of `s`.
[[nodiscard]] WordSet neighborhood(const WordSet& s);
/// neighborhood(s) minus s itself.
[[nodiscard]] WordSet spherical_neighborhood(const WordSet& s);

/// All pairwise distances are at least 3.
[[nodiscard]] bool is_one_code(const WordSet& s);

/// Smallest pairwise distance; 0 for sets with fewer than two words.
[[nodiscard]] int minimum_distance(const WordSet& s);

/// Parity class shared by every word, or nothing when the set is mixed or empty.
[[nodiscard]] std::optional<bool> uniform_parity(const WordSet& s);

/// Appends a check bit so that every word gets coordinate-sum parity `odd`.
[[nodiscard]] WordSet extend(const WordSet& s, bool odd = false);

enum class PunctureMode { strict, permissive };

/// Deletes coordinate `i` from every word. Strict mode throws CollisionError when two
/// words merge.
[[nodiscard]] WordSet puncture(const WordSet& s, int i, PunctureMode mode = PunctureMode::strict);
/// Punctures the last coordinate.
[[nodiscard]] WordSet puncture(const WordSet& s);

/// Removes coordinate `i` from a raw bit pattern.
[[nodiscard]] constexpr std::uint64_t delete_coordinate(std::uint64_t bits, int i) noexcept {
  const std::uint64_t low = bits & ((std::uint64_t{1} << i) - 1);
  return low | ((bits >> (i + 1)) << i);
}

/// GF(2) dimension of span{x ⊕ x0 : x ∈ s}.
[[nodiscard]] int affine_rank(const WordSet& s);

}  // namespace mobiset
