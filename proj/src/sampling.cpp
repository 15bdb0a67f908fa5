#include "mobiset/sampling.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace mobiset {
namespace {

std::uint64_t random_bits(int n, Rng& rng) { return rng() & Word::full_mask(n); }

std::vector<int> random_perm(int n, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

Isometry random_isometry(int n, Rng& rng) { return Isometry(random_perm(n, rng), Word(n, random_bits(n, rng))); }

Isometry random_even_isometry(int n, Rng& rng) {
  std::uint64_t t = random_bits(n, rng);
  if (n > 0 && (std::popcount(t) & 1) != 0) t ^= 1U;
  return Isometry(random_perm(n, rng), Word(n, t));
}

SetPair random_one_code_pair(int n, std::size_t max_size, Rng& rng) {
  const bool odd = (rng() & 1U) != 0;
  std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(1, max_size));
  const std::size_t want[2] = {size_dist(rng), size_dist(rng)};
  std::vector<std::uint64_t> members[2];
  auto far_from = [](const std::vector<std::uint64_t>& code, std::uint64_t w) {
    return std::all_of(code.begin(), code.end(), [w](auto c) { return std::popcount(c ^ w) >= 3; });
  };
  for (int side = 0; side < 2; ++side) {
    for (int attempt = 0; attempt < 64 * static_cast<int>(want[side]) && members[side].size() < want[side];
         ++attempt) {
      std::uint64_t w = random_bits(n, rng);
      if (((std::popcount(w) & 1) != 0) != odd) w ^= 1U;
      const auto& other = members[1 - side];
      if (std::find(other.begin(), other.end(), w) != other.end()) continue;
      if (far_from(members[side], w)) members[side].push_back(w);
    }
  }
  return {WordSet(n, std::move(members[0])), WordSet(n, std::move(members[1]))};
}

SetPair sample_hypothesis_pair(int n, Rng& rng) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("hypothesis pairs need even n >= 2");
  const auto kind = rng() % 3;
  if (kind == 2) return random_one_code_pair(n, static_cast<std::size_t>(n) * 2, rng);

  SetPair base = n % 4 == 0 && (rng() & 1U) != 0
                     ? SetPair{standard_partition(n / 4)[0], standard_partition(n / 4)[1 + rng() % 2]}
                     : linear_ems_iterated_pair((n - 2) / 2);
  const Isometry sigma = random_isometry(n, rng);
  SetPair image{apply_isometry(sigma, base.first), apply_isometry(sigma, base.second)};
  if (kind == 1) {
    for (auto* side : {&image.first, &image.second}) {
      const auto drop = rng() % (side->size() + 1);
      std::vector<std::uint64_t> kept;
      for (std::size_t i = 0; i < side->size(); ++i) {
        if (i != drop && rng() % 4 != 0) kept.push_back(side->bits()[i]);
      }
      *side = WordSet(n, std::move(kept));
    }
  }
  return image;
}

}  // namespace mobiset
