#include <doctest.h>

#include <bit>
#include <set>

#include "mobiset/constructions.hpp"
#include "mobiset/dist_graph.hpp"
#include "mobiset/hamming.hpp"
#include "mobiset/isometry.hpp"
#include "mobiset/mobility.hpp"
#include "mobiset/sampling.hpp"

using namespace mobiset;

namespace {

// Brute-force references: scan the whole hypercube.
WordSet neighborhood_by_scan(const WordSet& s) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << s.dimension()); ++x) {
    for (auto b : s.bits()) {
      if (std::popcount(x ^ b) <= 1) {
        out.push_back(x);
        break;
      }
    }
  }
  return WordSet(s.dimension(), out);
}

int affine_rank_by_closure(const WordSet& s) {
  std::set<std::uint64_t> span{0};
  for (auto b : s.bits()) {
    const std::uint64_t v = b ^ s.bits().front();
    std::set<std::uint64_t> next = span;
    for (auto x : span) next.insert(x ^ v);
    span = next;
  }
  return std::countr_zero(span.size());
}

WordSet random_one_code(int n, Rng& rng) { return random_one_code_pair(n, 12, rng).first; }

}  // namespace

TEST_CASE("word text form puts coordinate 0 first") {
  const Word w = Word::from_string("1100");
  CHECK(w.bits() == 0b0011);
  CHECK(w.to_string() == "1100");
  CHECK(w[0]);
  CHECK_FALSE(w[2]);
  CHECK_THROWS_AS(Word(3, 0b1000), DimensionError);
  CHECK_THROWS_AS(Word(64, 0), DimensionError);
  CHECK_THROWS(Word::from_string("10a"));
}

TEST_CASE("distance") {
  CHECK(distance(Word::from_string("000"), Word::from_string("000")) == 0);
  CHECK(distance(Word::from_string("100110010"), Word::from_string("011110000")) == 4);
  CHECK(distance(Word::from_string("1100"), Word::from_string("0011")) == 4);
  CHECK_THROWS_AS((void)distance(Word::from_string("00"), Word::from_string("000")), DimensionError);
}

TEST_CASE("parity") {
  CHECK_FALSE(parity(Word::from_string("0000")));
  CHECK(parity(Word::from_string("111")));
  CHECK_FALSE(parity(Word::from_string("011110000")));
}

TEST_CASE("sphere and ball") {
  CHECK(sphere(Word::from_string("00")) == WordSet::parse({"10", "01"}));
  CHECK(ball(Word::from_string("000")) == WordSet::parse({"000", "100", "010", "001"}));
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const Word x(8, rng() & 0xFF);
    CHECK(sphere(x).size() == 8);
    CHECK(ball(x).size() == 9);
  }
}

TEST_CASE("neighborhood") {
  CHECK(neighborhood(WordSet::parse({"000", "111"})).size() == 8);
  CHECK(neighborhood(WordSet(5)).empty());
  CHECK(neighborhood(WordSet::parse({"1100"})) ==
        WordSet::parse({"1100", "0100", "1000", "1110", "1101"}));
  CHECK(spherical_neighborhood(WordSet::parse({"00"})) == WordSet::parse({"01", "10"}));
  CHECK(spherical_neighborhood(WordSet::parse({"11"})) == WordSet::parse({"01", "10"}));
  const WordSet star = spherical_neighborhood(WordSet::parse({"1100", "0011"}));
  CHECK(star.size() == 8);
  for (const auto& w : star) CHECK((w.weight() == 1 || w.weight() == 3));
}

TEST_CASE("neighborhood matches a full scan and has |S|(n+1) points on 1-codes") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const WordSet s = random_one_code(n, rng);
    REQUIRE(is_one_code(s));
    CHECK(neighborhood(s) == neighborhood_by_scan(s));
    CHECK(neighborhood(s).size() == s.size() * static_cast<std::size_t>(n + 1));
    CHECK(spherical_neighborhood(s).size() == s.size() * static_cast<std::size_t>(n));
  }
}

TEST_CASE("is_one_code") {
  CHECK(is_one_code(WordSet::parse({"000", "111"})));
  CHECK_FALSE(is_one_code(WordSet::parse({"000", "110"})));
  CHECK(is_one_code(standard_partition(2)[0]));
  CHECK(minimum_distance(standard_partition(2)[0]) == 4);
}

TEST_CASE("extend and puncture") {
  CHECK(extend(WordSet::parse({"00", "11"}), false) == WordSet::parse({"000", "110"}));
  CHECK(extend(WordSet::parse({"0", "1"}), true) == WordSet::parse({"01", "10"}));
  CHECK(puncture(WordSet::parse({"000", "111"}), 2) == WordSet::parse({"00", "11"}));
  CHECK_THROWS_AS((void)puncture(WordSet::parse({"01", "11"}), 0), CollisionError);
  CHECK(puncture(WordSet::parse({"01", "11"}), 0, PunctureMode::permissive) == WordSet::parse({"1"}));
  CHECK_THROWS_AS((void)puncture(WordSet::parse({"01"}), 2), DimensionError);
  CHECK_THROWS_AS((void)extend(WordSet(63), false), DimensionError);

  const WordSet ms = puncture(standard_partition(2)[0], 7);
  CHECK(ms.dimension() == 7);
  CHECK(ms.size() == 12);
  CHECK(is_mobile(ms));
}

TEST_CASE("extend then puncture is the identity; extension has uniform parity") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<std::uint64_t> raw;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 20); ++i) raw.push_back(rng() & Word::full_mask(n));
    const WordSet s(n, raw);
    for (bool odd : {false, true}) {
      const WordSet e = extend(s, odd);
      CHECK(puncture(e) == s);
      CHECK(uniform_parity(e) == std::optional<bool>(odd));
    }
  }
}

TEST_CASE("distance graph examples") {
  const DistGraph cycle = distance_graph(WordSet::parse({"1100", "0011", "1010", "0101"}), 2);
  CHECK(cycle.edge_count() == 4);
  CHECK(is_regular(cycle, 2));
  CHECK(is_bipartite(cycle));
  CHECK(components(cycle).size() == 1);

  const DistGraph single = distance_graph(WordSet::parse({"000"}), 2);
  CHECK(single.order() == 1);
  CHECK(single.edge_count() == 0);

  CHECK(distance_graph(standard_partition(2)[0], 2).edge_count() == 0);
  CHECK(components(distance_graph(standard_partition(2)[0], 4)).size() == 1);

  const DistGraph triangle = distance_graph(WordSet::parse({"000", "110", "011"}), 2);
  CHECK(triangle.edge_count() == 3);
  CHECK_FALSE(is_bipartite(triangle));

  CHECK_THROWS((void)distance_graph(WordSet::parse({"0"}), 0));
}

TEST_CASE("distance graph is symmetric and matches the distance predicate") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<std::uint64_t> raw;
    for (int i = 0; i < 12; ++i) raw.push_back(rng() & Word::full_mask(n));
    const WordSet s(n, raw);
    const int d = 1 + static_cast<int>(rng() % 3);
    const DistGraph g = distance_graph(s, d);
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < g.order(); ++b) {
        const auto& adj = g.adjacency[a];
        const bool edge = std::find(adj.begin(), adj.end(), b) != adj.end();
        CHECK(edge == (distance(g.vertices[a], g.vertices[b]) == d));
      }
    }
    CHECK(distance_graph(extend(s), 1).edge_count() == 0);
  }
}

TEST_CASE("components splits disconnected graphs") {
  const auto parts = components(distance_graph(WordSet::parse({"0000", "1100", "1111"}), 2));
  REQUIRE(parts.size() == 1);
  const auto two = components(distance_graph(WordSet::parse({"000000", "110000", "001111"}), 2));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == WordSet::parse({"000000", "110000"}));
  CHECK(two[1] == WordSet::parse({"001111"}));
}

TEST_CASE("affine rank") {
  CHECK(affine_rank(WordSet::parse({"000"})) == 0);
  CHECK(affine_rank(linear_ms(2).first) == 2);
  CHECK(affine_rank(grid36().first) == 9);
  CHECK_THROWS((void)affine_rank(WordSet(3)));

  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<std::uint64_t> raw;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 8); ++i) raw.push_back(rng() & Word::full_mask(n));
    const WordSet s(n, raw);
    const int r = affine_rank(s);
    CHECK(r == affine_rank_by_closure(s));
    CHECK(r <= std::min<int>(static_cast<int>(s.size()) - 1, n));
    CHECK(affine_rank(apply_isometry(random_isometry(n, rng), s)) == r);
  }
}

TEST_CASE("apply_isometry") {
  const WordSet g = grid36().first;
  CHECK(apply_isometry(Isometry::identity(9), g) == g);
  CHECK(apply_isometry(Isometry::translation(Word::ones(9)), g) == grid36().second);
  CHECK_THROWS_AS((void)apply_isometry(Isometry::identity(4), g), DimensionError);

  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Isometry sigma = random_isometry(n, rng);
    const WordSet s = random_one_code(n, rng);
    const WordSet image = apply_isometry(sigma, s);
    CHECK(image.size() == s.size());
    CHECK(is_one_code(image));
    for (const auto& u : s) {
      for (const auto& v : s) CHECK(distance(sigma(u), sigma(v)) == distance(u, v));
    }
  }
}

TEST_CASE("the linear family is closed under coordinatewise xor") {
  for (int m = 1; m <= 5; ++m) {
    const WordSet lin = linear_ms(m).first;
    for (auto a : lin.bits()) {
      for (auto b : lin.bits()) CHECK(lin.contains_bits(a ^ b));
    }
  }
}
