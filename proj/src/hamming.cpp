#include "mobiset/hamming.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>

namespace mobiset {

int distance(const Word& u, const Word& v) {
  if (u.dimension() != v.dimension()) throw DimensionError("distance between different dimensions");
  return std::popcount(u.bits() ^ v.bits());
}

bool parity(const Word& x) noexcept { return (std::popcount(x.bits()) & 1) != 0; }

WordSet sphere(const Word& x) {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(x.dimension()));
  for (int i = 0; i < x.dimension(); ++i) out.push_back(x.bits() ^ (std::uint64_t{1} << i));
  return WordSet(x.dimension(), std::move(out));
}

WordSet ball(const Word& x) {
  std::vector<std::uint64_t> out{x.bits()};
  for (int i = 0; i < x.dimension(); ++i) out.push_back(x.bits() ^ (std::uint64_t{1} << i));
  return WordSet(x.dimension(), std::move(out));
}

WordSet neighborhood(const WordSet& s) {
  const int n = s.dimension();
  std::vector<std::uint64_t> out;
  out.reserve(s.size() * static_cast<std::size_t>(n + 1));
  for (auto b : s.bits()) {
    out.push_back(b);
    for (int i = 0; i < n; ++i) out.push_back(b ^ (std::uint64_t{1} << i));
  }
  return WordSet(n, std::move(out));
}

WordSet spherical_neighborhood(const WordSet& s) { return set_difference(neighborhood(s), s); }

int minimum_distance(const WordSet& s) {
  const auto& b = s.bits();
  if (b.size() < 2) return 0;
  int best = s.dimension() + 1;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      best = std::min(best, std::popcount(b[i] ^ b[j]));
    }
  }
  return best;
}

bool is_one_code(const WordSet& s) { return s.size() < 2 || minimum_distance(s) >= 3; }

std::optional<bool> uniform_parity(const WordSet& s) {
  if (s.empty()) return std::nullopt;
  const bool p = (std::popcount(s.bits().front()) & 1) != 0;
  for (auto b : s.bits()) {
    if (((std::popcount(b) & 1) != 0) != p) return std::nullopt;
  }
  return p;
}

WordSet extend(const WordSet& s, bool odd) {
  const int n = s.dimension();
  if (n + 1 > kMaxDimension) throw DimensionError("extension exceeds the dimension limit");
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (auto b : s.bits()) {
    const std::uint64_t check = static_cast<std::uint64_t>((std::popcount(b) & 1) ^ (odd ? 1 : 0));
    out.push_back(b | (check << n));
  }
  return WordSet(n + 1, std::move(out));
}

WordSet puncture(const WordSet& s, int i, PunctureMode mode) {
  const int n = s.dimension();
  if (i < 0 || i >= n) {
    throw DimensionError("cannot puncture coordinate " + std::to_string(i) + " of E^" +
                         std::to_string(n));
  }
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (auto b : s.bits()) out.push_back(delete_coordinate(b, i));
  WordSet result(n - 1, std::move(out));
  if (mode == PunctureMode::strict && result.size() != s.size()) {
    throw CollisionError("puncturing coordinate " + std::to_string(i) + " merges words");
  }
  return result;
}

WordSet puncture(const WordSet& s) { return puncture(s, s.dimension() - 1); }

int affine_rank(const WordSet& s) {
  if (s.empty()) throw std::invalid_argument("affine rank of an empty set");
  // basis[i] holds a vector whose highest set bit is i.
  std::array<std::uint64_t, 64> basis{};
  int rank = 0;
  const std::uint64_t base = s.bits().front();
  for (auto b : s.bits()) {
    std::uint64_t v = b ^ base;
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (basis[static_cast<std::size_t>(top)] == 0) {
        basis[static_cast<std::size_t>(top)] = v;
        ++rank;
        break;
      }
      v ^= basis[static_cast<std::size_t>(top)];
    }
  }
  return rank;
}

}  // namespace mobiset
