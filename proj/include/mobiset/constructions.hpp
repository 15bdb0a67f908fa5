#pragma once

#include <array>
#include <utility>
#include <vector>

#include "mobiset/word_set.hpp"

namespace mobiset {

/// A set together with one of its alternatives.
struct SetPair {
  WordSet first;
  WordSet second;
};

// ---------------------------------------------------------------------------
// Quadruple operation and standard vectors
// ---------------------------------------------------------------------------

/// The 4×4 operation on {0,1,2,3}: symmetric, row 0 is the identity, and
/// a⋆b = c⋆d whenever a, b, c, d are pairwise distinct.
inline constexpr std::array<std::array<int, 4>, 4> kStarTable{{
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
}};

[[nodiscard]] int star(int j, int t);
/// star(j, t) − 1 for a pair of distinct coordinates inside one quadruple.
[[nodiscard]] int pair_index(int j, int t);

/// Weight-2k word of E^{4k} with exactly two ones per quadruple of coordinates.
/// Quadruple q occupies coordinates 4q..4q+3.
struct StandardVector {
  Word word;
  std::vector<std::pair<int, int>> pairs;  // (j, t), j < t, per quadruple
  int index = 0;                           // sum of pair indices mod 3
};

/// All 6^k standard vectors; quadruple 0 varies slowest, pairs in lexicographic order.
[[nodiscard]] std::vector<StandardVector> standard_vectors(int k);
/// Index class of an arbitrary standard word; throws if `w` is not standard.
[[nodiscard]] int standard_index(const Word& w);
/// S0, S1, S2: standard vectors split by index.
[[nodiscard]] std::array<WordSet, 3> standard_partition(int k);

/// S0 punctured at its last coordinate: a mobile set in E^{4k−1} of size 2·6^{k−1}.
[[nodiscard]] WordSet theorem_ms(int k);

// ---------------------------------------------------------------------------
// Linear and perfect-code families
// ---------------------------------------------------------------------------

/// {(x, x, |x|)} and {(x, x, |x| ⊕ 1)} over x ∈ E^m, in E^{2m+1}.
[[nodiscard]] SetPair linear_ms(int m);

/// Linear 1-perfect code of length 2^r − 1. Coordinate c has parity-check column c+1.
[[nodiscard]] WordSet hamming_code(int r);
[[nodiscard]] bool is_perfect_code(const WordSet& c);
/// (C, C ⊕ e_i) for a 1-perfect code C.
[[nodiscard]] SetPair perfect_pair(const WordSet& code, int i);

// ---------------------------------------------------------------------------
// Two-coordinate lift
// ---------------------------------------------------------------------------

/// R = {(x,0,0) : x∈M} ∪ {(x,1,1) : x∈M'},  R' = {(x,1,1) : x∈M} ∪ {(x,0,0) : x∈M'}.
/// Does not check that (M, M') is an extended mobile pair.
[[nodiscard]] SetPair linear_extension(const WordSet& m, const WordSet& alt);
/// Same as linear_extension but throws std::invalid_argument unless all three
/// extended-mobility conditions hold for (M, M').
[[nodiscard]] SetPair linear_extension_verified(const WordSet& m, const WordSet& alt);

/// The lift applied m times starting from ({00}, {11}); returns the pair in E^{2m+2}.
[[nodiscard]] SetPair linear_ems_iterated_pair(int m);
[[nodiscard]] WordSet linear_ems_iterated(int m);

// ---------------------------------------------------------------------------
// 3×3 cyclic example
// ---------------------------------------------------------------------------

/// Base arrays, row-major.
inline constexpr std::array<const char*, 4> kGrid36Base{"100110010", "011110000", "101001011",
                                                        "001100111"};

/// The four base words closed under cyclic row and column shifts, and their complements.
[[nodiscard]] SetPair grid36();
/// Cyclic shift of a 3×3 array stored row-major: rows down by `dr`, columns right by `dc`.
[[nodiscard]] Word grid_shift(const Word& w, int dr, int dc);

// ---------------------------------------------------------------------------
// i-component correspondence
// ---------------------------------------------------------------------------

/// {(x,|x|,0) : x∈M} ∪ {(x,|x|,1) : x∈M'}, two dimensions up.
[[nodiscard]] WordSet icomponent_from_pair(const WordSet& m, const WordSet& alt);

/// parts[a][b] = {x : (x, |x|⊕a, b) ∈ M}, two dimensions down.
struct IComponentParts {
  std::array<std::array<WordSet, 2>, 2> parts;
};
[[nodiscard]] IComponentParts pair_from_icomponent(const WordSet& m);

}  // namespace mobiset
