#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "mobiset/constructions.hpp"
#include "mobiset/dist_graph.hpp"
#include "mobiset/hamming.hpp"
#include "mobiset/mobility.hpp"

using namespace mobiset;

namespace {

// Parity-check kernel by scanning E^n: syndrome = xor of (c+1) over the support.
WordSet hamming_by_scan(int r) {
  const int n = (1 << r) - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    unsigned syndrome = 0;
    for (int c = 0; c < n; ++c) {
      if ((x >> c) & 1U) syndrome ^= static_cast<unsigned>(c + 1);
    }
    if (syndrome == 0) out.push_back(x);
  }
  return WordSet(n, out);
}

}  // namespace

TEST_CASE("star table values") {
  CHECK(star(1, 2) == 3);
  CHECK(star(2, 3) == 1);
  CHECK(pair_index(2, 3) == 0);
  CHECK(pair_index(0, 1) == 0);
  CHECK(pair_index(0, 2) == 1);
  CHECK(pair_index(0, 3) == 2);
  CHECK_THROWS((void)pair_index(2, 2));
  CHECK_THROWS((void)star(4, 0));
}

TEST_CASE("star table is symmetric with identity row and equal values on complementary pairs") {
  for (int j = 0; j < 4; ++j) {
    CHECK(star(0, j) == j);
    for (int t = 0; t < 4; ++t) CHECK(star(j, t) == star(t, j));
  }
  std::array<int, 4> p{0, 1, 2, 3};
  int count = 0;
  do {
    CHECK(star(p[0], p[1]) == star(p[2], p[3]));
    ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(count == 24);
}

TEST_CASE("standard vectors for k = 1") {
  const auto v = standard_vectors(1);
  REQUIRE(v.size() == 6);
  auto index_of = [&](const char* text) {
    const Word w = Word::from_string(text);
    auto it = std::find_if(v.begin(), v.end(), [&](const auto& s) { return s.word == w; });
    REQUIRE(it != v.end());
    return it->index;
  };
  CHECK(index_of("1100") == 0);
  CHECK(index_of("0011") == 0);
  CHECK(index_of("1010") == 1);
  CHECK(index_of("0101") == 1);
  CHECK(index_of("1001") == 2);
  CHECK(index_of("0110") == 2);
  CHECK(standard_partition(1)[0] == WordSet::parse({"1100", "0011"}));
}

TEST_CASE("standard vectors have two ones per quadruple and balanced indices") {
  for (int k = 1; k <= 4; ++k) {
    const auto v = standard_vectors(k);
    std::size_t expected = 1;
    for (int i = 0; i < k; ++i) expected *= 6;
    CHECK(v.size() == expected);
    std::array<std::size_t, 3> counts{};
    for (const auto& s : v) {
      CHECK(s.word.weight() == 2 * k);
      for (int q = 0; q < k; ++q) CHECK(std::popcount((s.word.bits() >> (4 * q)) & 0xFU) == 2);
      CHECK(standard_index(s.word) == s.index);
      ++counts[static_cast<std::size_t>(s.index)];
    }
    for (auto c : counts) CHECK(c == expected / 3);
    const auto parts = standard_partition(k);
    CHECK(set_union(set_union(parts[0], parts[1]), parts[2]).size() == expected);
    CHECK(disjoint(parts[0], parts[1]));
    CHECK(disjoint(parts[1], parts[2]));
    CHECK(disjoint(parts[0], parts[2]));
  }
  CHECK(standard_vectors(3).size() == 216);
  CHECK(standard_partition(2)[1].size() == 12);
  CHECK_THROWS_AS((void)standard_vectors(16), DimensionError);
  CHECK_THROWS((void)standard_index(Word::from_string("1110")));
}

TEST_CASE("cross-index distance-2 graphs are bipartite and 2k-regular") {
  for (int k = 1; k <= 3; ++k) {
    const auto parts = standard_partition(k);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(distance_graph(parts[i], 2).edge_count() == 0);
      for (std::size_t j = i + 1; j < 3; ++j) {
        const DistGraph g = distance_graph(set_union(parts[i], parts[j]), 2);
        CHECK(has_bipartition(g, parts[i], parts[j]));
        CHECK(is_regular(g, static_cast<std::size_t>(2 * k)));
      }
    }
  }
}

TEST_CASE("theorem_ms sizes") {
  CHECK(theorem_ms(2).size() == 12);
  CHECK(theorem_ms(2).dimension() == 7);
  CHECK(theorem_ms(3).size() == 72);
  CHECK(theorem_ms(3).dimension() == 11);
  // 12 = 1.5 · L(7) with L(7) = 8
  CHECK(theorem_ms(2).size() * 2 == 3 * 8);
  CHECK_THROWS((void)theorem_ms(1));
}

TEST_CASE("linear mobile sets") {
  const auto one = linear_ms(1);
  CHECK(one.first == WordSet::parse({"000", "111"}));
  CHECK(one.second == WordSet::parse({"001", "110"}));
  CHECK(linear_ms(2).first == WordSet::parse({"00000", "01011", "10101", "11110"}));
  for (int m = 1; m <= 6; ++m) {
    const auto p = linear_ms(m);
    CHECK(p.first.size() == (std::size_t{1} << m));
    CHECK(p.second.size() == (std::size_t{1} << m));
    CHECK(p.first.dimension() == 2 * m + 1);
    CHECK(disjoint(p.first, p.second));
    CHECK(neighborhood(p.first) == neighborhood(p.second));
  }
  CHECK_THROWS_AS((void)linear_ms(32), DimensionError);
}

TEST_CASE("hamming codes") {
  CHECK(hamming_code(2) == WordSet::parse({"000", "111"}));
  for (int r = 2; r <= 4; ++r) {
    const WordSet c = hamming_code(r);
    CHECK(c == hamming_by_scan(r));
    CHECK(is_perfect_code(c));
  }
  CHECK(hamming_code(3).size() == 16);
  const auto p = perfect_pair(hamming_code(3), 0);
  CHECK(neighborhood(p.first).size() == 128);
  CHECK(neighborhood(p.second).size() == 128);
  CHECK(is_mobile_pair(p.first, p.second));
  CHECK_THROWS((void)perfect_pair(linear_ms(3).first, 0));
}

TEST_CASE("two-coordinate lift") {
  const auto r = linear_extension(WordSet::parse({"00"}), WordSet::parse({"11"}));
  CHECK(r.first == WordSet::parse({"0000", "1111"}));
  CHECK(r.second == WordSet::parse({"0011", "1100"}));

  const auto parts = standard_partition(2);
  const auto lifted = linear_extension_verified(parts[0], parts[1]);
  CHECK(lifted.first.dimension() == 10);
  CHECK(lifted.first.size() == 24);
  CHECK(ems_conditions(lifted.first, lifted.second, 9).all());
  for (auto b : lifted.first.bits()) CHECK(((b >> 8) & 1U) == ((b >> 9) & 1U));
  // regular of degree (n+2)/2 in the distance-2 graph of R ∪ R'
  CHECK(is_regular(distance_graph(set_union(lifted.first, lifted.second), 2), 5));

  CHECK_THROWS_AS((void)linear_extension(WordSet::parse({"00"}), WordSet::parse({"111"})), DimensionError);
  CHECK_THROWS((void)linear_extension_verified(WordSet::parse({"0000"}), WordSet::parse({"1111"})));
}

TEST_CASE("iterated lift from the trivial pair") {
  CHECK(linear_ems_iterated(0) == WordSet::parse({"00"}));
  CHECK(linear_ems_iterated(1) == WordSet::parse({"0000", "1111"}));
  const WordSet two = linear_ems_iterated(2);
  CHECK(two.dimension() == 6);
  CHECK(two.size() == 4);
  for (auto a : two.bits()) {
    for (auto b : two.bits()) CHECK(two.contains_bits(a ^ b));
  }
  for (int m = 0; m <= 5; ++m) {
    const auto p = linear_ems_iterated_pair(m);
    CHECK(p.first.size() == (std::size_t{1} << m));
    CHECK(ems_conditions(p.first, p.second, p.first.dimension() - 1).all());
  }
}

TEST_CASE("grid36") {
  const auto [m, alt] = grid36();
  CHECK(m.size() == 36);
  for (const char* base : kGrid36Base) CHECK(m.contains(Word::from_string(base)));
  for (const auto& w : m) {
    for (int dr = 0; dr < 3; ++dr) {
      for (int dc = 0; dc < 3; ++dc) CHECK(m.contains(grid_shift(w, dr, dc)));
    }
  }
  CHECK(disjoint(m, alt));
  CHECK(is_one_code(m));
  CHECK(is_one_code(alt));
  CHECK(affine_rank(m) == 9);
  // (r, c) -> coordinate 3r + c; shifting rows down moves the top row to the middle.
  CHECK(grid_shift(Word::from_string("100000000"), 1, 0) == Word::from_string("000100000"));
  CHECK(grid_shift(Word::from_string("001000000"), 0, 1) == Word::from_string("100000000"));
}

TEST_CASE("i-component correspondence") {
  const WordSet base = icomponent_from_pair(WordSet::parse({"0"}), WordSet::parse({"1"}));
  CHECK(base == WordSet::parse({"000", "111"}));
  const auto lin = linear_ms(1);
  const WordSet ic = icomponent_from_pair(lin.first, lin.second);
  CHECK(ic.dimension() == 5);
  CHECK(ic.size() == 4);

  const auto parts = pair_from_icomponent(ic);
  CHECK(parts.parts[0][0] == lin.first);
  CHECK(parts.parts[0][1] == lin.second);
  CHECK(parts.parts[1][0].empty());
  CHECK(parts.parts[1][1].empty());

  const auto small = pair_from_icomponent(WordSet::parse({"000", "111"}));
  CHECK(small.parts[0][0] == WordSet::parse({"0"}));
  CHECK(small.parts[0][1] == WordSet::parse({"1"}));
  CHECK_THROWS((void)pair_from_icomponent(WordSet::parse({"1"})));
}

TEST_CASE("cardinality of the main family against the two bound formulas") {
  // |theorem_ms(k)| = 1.5^(k-1) · 2^(2k-1), compared as 2^(k-1)|M| = 3^(k-1) 2^(2k-1).
  for (int k = 2; k <= 5; ++k) {
    std::uint64_t lhs = standard_partition(k)[0].size() << (k - 1);
    std::uint64_t rhs = std::uint64_t{1} << (2 * k - 1);
    for (int i = 0; i < k - 1; ++i) rhs *= 3;
    CHECK(lhs == rhs);
  }
}
