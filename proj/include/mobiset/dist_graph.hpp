#pragma once

#include <cstddef>
#include <vector>

#include "mobiset/word_set.hpp"

namespace mobiset {

/// Graph on a word set joining words at one fixed Hamming distance.
struct DistGraph {
  std::vector<Word> vertices;
  int dist = 0;
  /// adjacency[v] lists vertex indices in ascending order.
  std::vector<std::vector<std::size_t>> adjacency;

  [[nodiscard]] std::size_t order() const noexcept { return vertices.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept;
  [[nodiscard]] std::size_t degree(std::size_t v) const { return adjacency[v].size(); }
  [[nodiscard]] std::size_t index_of(const Word& w) const;
};

[[nodiscard]] DistGraph distance_graph(const WordSet& s, int dist);

[[nodiscard]] bool is_regular(const DistGraph& g, std::size_t degree);
[[nodiscard]] bool is_bipartite(const DistGraph& g);
/// Connected components, each as a word set, ordered by smallest member.
[[nodiscard]] std::vector<WordSet> components(const DistGraph& g);

/// Every edge joins a word of `left` to a word of `right` (the two must partition the vertices).
[[nodiscard]] bool has_bipartition(const DistGraph& g, const WordSet& left, const WordSet& right);

}  // namespace mobiset
