#include "mobiset/dist_graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace mobiset {

std::size_t DistGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& adj : adjacency) twice += adj.size();
  return twice / 2;
}

std::size_t DistGraph::index_of(const Word& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) throw std::out_of_range("word is not a vertex");
  return static_cast<std::size_t>(it - vertices.begin());
}

DistGraph distance_graph(const WordSet& s, int dist) {
  if (dist < 1) throw std::invalid_argument("distance graph needs dist >= 1");
  DistGraph g;
  g.vertices = s.words();
  g.dist = dist;
  g.adjacency.resize(g.vertices.size());
  const auto& b = s.bits();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (std::popcount(b[i] ^ b[j]) == dist) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  return g;
}

bool is_regular(const DistGraph& g, std::size_t degree) {
  return std::all_of(g.adjacency.begin(), g.adjacency.end(),
                     [degree](const auto& adj) { return adj.size() == degree; });
}

bool is_bipartite(const DistGraph& g) {
  std::vector<int> side(g.order(), -1);
  for (std::size_t root = 0; root < g.order(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      for (auto u : g.adjacency[v]) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          q.push(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<WordSet> components(const DistGraph& g) {
  std::vector<WordSet> out;
  std::vector<bool> seen(g.order(), false);
  const int n = g.vertices.empty() ? 0 : g.vertices.front().dimension();
  for (std::size_t root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<std::uint64_t> members;
    std::queue<std::size_t> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      members.push_back(g.vertices[v].bits());
      for (auto u : g.adjacency[v]) {
        if (!seen[u]) {
          seen[u] = true;
          q.push(u);
        }
      }
    }
    out.emplace_back(n, std::move(members));
  }
  return out;
}

bool has_bipartition(const DistGraph& g, const WordSet& left, const WordSet& right) {
  if (!disjoint(left, right) || left.size() + right.size() != g.order()) return false;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const bool in_left = left.contains(g.vertices[v]);
    if (!in_left && !right.contains(g.vertices[v])) return false;
    for (auto u : g.adjacency[v]) {
      if (left.contains(g.vertices[u]) == in_left) return false;
    }
  }
  return true;
}

}  // namespace mobiset
