#include "mobiset/exact_cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mobiset {
namespace {

void validate(const CoverInstance& inst) {
  std::unordered_set<CoverElement> universe;
  for (auto e : inst.universe) {
    if (!universe.insert(e).second) throw std::invalid_argument("duplicate universe element");
  }
  std::unordered_set<CoverLabel> labels;
  for (const auto& c : inst.candidates) {
    if (!labels.insert(c.label).second) throw std::invalid_argument("duplicate candidate label");
    if (c.subset.empty()) throw std::invalid_argument("empty candidate subset");
    std::unordered_set<CoverElement> seen;
    for (auto e : c.subset) {
      if (!universe.contains(e)) throw std::invalid_argument("candidate element outside universe");
      if (!seen.insert(e).second) throw std::invalid_argument("candidate lists an element twice");
    }
  }
}

class DancingLinks {
 public:
  explicit DancingLinks(const CoverInstance& inst) {
    const std::size_t columns = inst.universe.size();
    std::unordered_map<CoverElement, std::size_t> column_of;
    for (std::size_t i = 0; i < columns; ++i) column_of.emplace(inst.universe[i], i + 1);

    // Header 0 and column heads 1..m.
    for (std::size_t i = 0; i <= columns; ++i) {
      push_node(i);
      left_[i] = i == 0 ? columns : i - 1;
      right_[i] = i == columns ? 0 : i + 1;
    }
    size_.assign(columns + 1, 0);

    std::vector<std::size_t> order(inst.candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return inst.candidates[a].label < inst.candidates[b].label;
    });
    for (auto idx : order) {
      const auto& cand = inst.candidates[idx];
      std::size_t first = 0;
      for (auto e : cand.subset) {
        const std::size_t col = column_of.at(e);
        const std::size_t node = push_node(col);
        row_label_[node] = cand.label;
        up_[node] = up_[col];
        down_[node] = col;
        down_[up_[col]] = node;
        up_[col] = node;
        ++size_[col];
        if (first == 0) {
          first = node;
          left_[node] = right_[node] = node;
        } else {
          left_[node] = left_[first];
          right_[node] = first;
          right_[left_[first]] = node;
          left_[first] = node;
        }
      }
    }
  }

  void search(std::size_t cap, std::vector<CoverSolution>& out, CoverStats& stats) {
    ++stats.nodes;
    if (right_[0] == 0) {
      CoverSolution sol{partial_};
      std::sort(sol.chosen.begin(), sol.chosen.end());
      out.push_back(std::move(sol));
      ++stats.solutions;
      return;
    }
    std::size_t best = right_[0];
    for (std::size_t c = right_[0]; c != 0; c = right_[c]) {
      if (size_[c] < size_[best]) best = c;
    }
    if (size_[best] == 0) return;
    cover(best);
    for (std::size_t r = down_[best]; r != best && out.size() < cap; r = down_[r]) {
      partial_.push_back(row_label_[r]);
      for (std::size_t j = right_[r]; j != r; j = right_[j]) cover(column_[j]);
      search(cap, out, stats);
      for (std::size_t j = left_[r]; j != r; j = left_[j]) uncover(column_[j]);
      partial_.pop_back();
    }
    uncover(best);
  }

 private:
  std::size_t push_node(std::size_t column) {
    const std::size_t id = left_.size();
    left_.push_back(id);
    right_.push_back(id);
    up_.push_back(id);
    down_.push_back(id);
    column_.push_back(column);
    row_label_.push_back(0);
    return id;
  }

  void cover(std::size_t c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (std::size_t i = down_[c]; i != c; i = down_[i]) {
      for (std::size_t j = right_[i]; j != i; j = right_[j]) {
        up_[down_[j]] = up_[j];
        down_[up_[j]] = down_[j];
        --size_[column_[j]];
      }
    }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = up_[c]; i != c; i = up_[i]) {
      for (std::size_t j = left_[i]; j != i; j = left_[j]) {
        ++size_[column_[j]];
        up_[down_[j]] = j;
        down_[up_[j]] = j;
      }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  std::vector<std::size_t> left_, right_, up_, down_, column_;
  std::vector<CoverLabel> row_label_;
  std::vector<std::size_t> size_;
  std::vector<CoverLabel> partial_;
};

}  // namespace

std::vector<CoverSolution> solve_all(const CoverInstance& inst, std::size_t cap, CoverStats* stats) {
  if (cap < 1) throw std::invalid_argument("solution cap must be at least 1");
  validate(inst);
  CoverStats local;
  std::vector<CoverSolution> out;
  DancingLinks dlx(inst);
  dlx.search(cap, out, local);
  if (stats != nullptr) {
    stats->nodes += local.nodes;
    stats->solutions += local.solutions;
  }
  return out;
}

std::optional<CoverSolution> solve_first(const CoverInstance& inst, CoverStats* stats) {
  auto all = solve_all(inst, 1, stats);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

bool is_exact_cover(const CoverInstance& inst, const CoverSolution& sol) {
  std::unordered_map<CoverLabel, const CoverCandidate*> by_label;
  for (const auto& c : inst.candidates) by_label.emplace(c.label, &c);
  std::unordered_map<CoverElement, int> hits;
  for (auto e : inst.universe) hits.emplace(e, 0);
  for (auto label : sol.chosen) {
    auto it = by_label.find(label);
    if (it == by_label.end()) return false;
    for (auto e : it->second->subset) {
      auto h = hits.find(e);
      if (h == hits.end() || ++h->second > 1) return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](const auto& kv) { return kv.second == 1; });
}

}  // namespace mobiset
