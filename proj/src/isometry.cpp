#include "mobiset/isometry.hpp"

#include <numeric>

namespace mobiset {

Isometry::Isometry(int n) : perm_(static_cast<std::size_t>(n)), mask_(Word::zero(n)) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

Isometry::Isometry(std::vector<int> perm, Word mask) : perm_(std::move(perm)), mask_(mask) {
  const int n = mask_.dimension();
  if (static_cast<int>(perm_.size()) != n) throw DimensionError("permutation length differs from mask");
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("coordinate map is not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

Isometry Isometry::translation(const Word& mask) {
  Isometry s(mask.dimension());
  s.mask_ = mask;
  return s;
}

Isometry Isometry::permutation(std::vector<int> perm) {
  const int n = static_cast<int>(perm.size());
  return Isometry(std::move(perm), Word::zero(n));
}

bool Isometry::is_identity() const { return *this == Isometry(dimension()); }

std::uint64_t permute_bits(std::uint64_t bits, const std::vector<int>& perm) noexcept {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out |= ((bits >> i) & 1U) << perm[i];
  }
  return out;
}

std::uint64_t Isometry::apply_bits(std::uint64_t bits) const noexcept {
  return permute_bits(bits, perm_) ^ mask_.bits();
}

Word Isometry::operator()(const Word& x) const {
  if (x.dimension() != dimension()) throw DimensionError("isometry applied to word of wrong dimension");
  return Word(dimension(), apply_bits(x.bits()));
}

WordSet apply_isometry(const Isometry& sigma, const WordSet& s) {
  if (s.dimension() != sigma.dimension()) throw DimensionError("isometry applied to set of wrong dimension");
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (auto b : s.bits()) out.push_back(sigma.apply_bits(b));
  return WordSet(s.dimension(), std::move(out));
}

Isometry compose(const Isometry& sigma, const Isometry& tau) {
  if (sigma.dimension() != tau.dimension()) throw DimensionError("composing isometries of different dimension");
  const int n = sigma.dimension();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < perm.size(); ++i) {
    perm[i] = sigma.perm()[static_cast<std::size_t>(tau.perm()[i])];
  }
  // sigma(pi_tau(x) ^ t_tau) = pi_sigma(pi_tau(x)) ^ pi_sigma(t_tau) ^ t_sigma
  const std::uint64_t mask = sigma.apply_bits(tau.mask().bits());
  return Isometry(std::move(perm), Word(n, mask));
}

Isometry invert(const Isometry& sigma) {
  const int n = sigma.dimension();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < inv.size(); ++i) inv[static_cast<std::size_t>(sigma.perm()[i])] = static_cast<int>(i);
  const std::uint64_t mask = permute_bits(sigma.mask().bits(), inv);
  return Isometry(std::move(inv), Word(n, mask));
}

}  // namespace mobiset
