#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mobiset {

/// Largest supported hypercube dimension; a word is stored in one 64-bit value.
inline constexpr int kMaxDimension = 63;

/// Thrown when operands live in different hypercubes or a dimension is out of range.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by strict puncturing when two words become equal.
class CollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex of the binary hypercube E^n.
///
/// Coordinate i (0-based) is bit i of `bits()`. The textual form lists
/// coordinate 0 first, so "1100" has bits 0b0011.
class Word {
 public:
  constexpr Word() = default;
  Word(int n, std::uint64_t bits);

  static Word from_string(std::string_view text);
  static Word zero(int n) { return Word(n, 0); }
  static Word ones(int n) { return Word(n, full_mask(n)); }
  static Word unit(int n, int i);

  [[nodiscard]] constexpr int dimension() const noexcept { return n_; }
  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] bool operator[](int i) const noexcept { return ((bits_ >> i) & 1U) != 0; }
  [[nodiscard]] int weight() const noexcept { return std::popcount(bits_); }

  [[nodiscard]] Word flipped(int i) const;
  [[nodiscard]] std::string to_string() const;

  /// Coordinatewise XOR.
  friend Word operator^(const Word& a, const Word& b);

  friend constexpr bool operator==(const Word&, const Word&) = default;
  /// Orders by dimension, then by numeric value of the bits.
  friend constexpr auto operator<=>(const Word&, const Word&) = default;

  static constexpr std::uint64_t full_mask(int n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

void check_dimension(int n);

}  // namespace mobiset
