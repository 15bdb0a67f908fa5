#pragma once

#include <vector>

#include "mobiset/word_set.hpp"

namespace mobiset {

/// Hypercube isometry x ↦ perm(x) ⊕ mask, where perm sends coordinate i to perm[i].
class Isometry {
 public:
  explicit Isometry(int n = 0);
  Isometry(std::vector<int> perm, Word mask);

  static Isometry identity(int n) { return Isometry(n); }
  static Isometry translation(const Word& mask);
  static Isometry permutation(std::vector<int> perm);

  [[nodiscard]] int dimension() const noexcept { return mask_.dimension(); }
  [[nodiscard]] const std::vector<int>& perm() const noexcept { return perm_; }
  [[nodiscard]] const Word& mask() const noexcept { return mask_; }
  [[nodiscard]] bool is_identity() const;

  [[nodiscard]] Word operator()(const Word& x) const;
  [[nodiscard]] std::uint64_t apply_bits(std::uint64_t bits) const noexcept;

  friend bool operator==(const Isometry&, const Isometry&) = default;
  friend auto operator<=>(const Isometry& a, const Isometry& b) {
    if (auto c = a.mask_ <=> b.mask_; c != 0) return c;
    return a.perm_ <=> b.perm_;
  }

 private:
  std::vector<int> perm_;
  Word mask_;
};

/// Moves coordinate i of `bits` to position perm[i].
[[nodiscard]] std::uint64_t permute_bits(std::uint64_t bits, const std::vector<int>& perm) noexcept;

[[nodiscard]] WordSet apply_isometry(const Isometry& sigma, const WordSet& s);

/// (sigma ∘ tau)(x) = sigma(tau(x)).
[[nodiscard]] Isometry compose(const Isometry& sigma, const Isometry& tau);
[[nodiscard]] Isometry invert(const Isometry& sigma);

}  // namespace mobiset
