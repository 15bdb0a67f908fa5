#include "mobiset/symmetry.hpp"

#include <algorithm>
#include <bit>

namespace mobiset {
namespace {

std::vector<int> column_weights(const WordSet& s) {
  std::vector<int> w(static_cast<std::size_t>(s.dimension()), 0);
  for (auto b : s.bits()) {
    for (int i = 0; i < s.dimension(); ++i) w[static_cast<std::size_t>(i)] += static_cast<int>((b >> i) & 1U);
  }
  return w;
}

std::vector<int> weight_profile(const WordSet& s) {
  std::vector<int> w;
  w.reserve(s.size());
  for (auto b : s.bits()) w.push_back(std::popcount(b));
  std::sort(w.begin(), w.end());
  return w;
}

class PermutationSearch {
 public:
  PermutationSearch(const WordSet& a, const WordSet& b, std::size_t limit, BudgetMeter& meter)
      : a_(a), b_(b), n_(a.dimension()), limit_(limit), meter_(meter),
        weight_a_(column_weights(a)), weight_b_(column_weights(b)),
        image_(static_cast<std::size_t>(n_), -1), used_(static_cast<std::size_t>(n_), false),
        pattern_a_(a.size(), 0), pattern_b_(b.size(), 0) {}

  std::vector<std::vector<int>> run() {
    if (a_.size() == b_.size()) extend(0);
    return std::move(found_);
  }

 private:
  // Projections of a onto coordinates 0..depth-1 and of b onto their images must agree
  // as multisets.
  bool projections_agree() const {
    auto pa = pattern_a_;
    auto pb = pattern_b_;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
  }

  void extend(int depth) {
    meter_.tick();
    if (depth == n_) {
      found_.push_back(image_);
      return;
    }
    const auto d = static_cast<std::size_t>(depth);
    for (int target = 0; target < n_ && found_.size() < limit_; ++target) {
      const auto t = static_cast<std::size_t>(target);
      if (used_[t] || weight_a_[d] != weight_b_[t]) continue;
      for (std::size_t w = 0; w < a_.size(); ++w) {
        pattern_a_[w] |= ((a_.bits()[w] >> depth) & 1U) << depth;
        pattern_b_[w] |= ((b_.bits()[w] >> target) & 1U) << depth;
      }
      if (projections_agree()) {
        used_[t] = true;
        image_[d] = target;
        extend(depth + 1);
        used_[t] = false;
        image_[d] = -1;
      }
      const std::uint64_t clear = ~(std::uint64_t{1} << depth);
      for (std::size_t w = 0; w < a_.size(); ++w) {
        pattern_a_[w] &= clear;
        pattern_b_[w] &= clear;
      }
    }
  }

  const WordSet& a_;
  const WordSet& b_;
  int n_;
  std::size_t limit_;
  BudgetMeter& meter_;
  std::vector<int> weight_a_;
  std::vector<int> weight_b_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> pattern_a_;
  std::vector<std::uint64_t> pattern_b_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<std::vector<int>> coordinate_permutations(const WordSet& a, const WordSet& b,
                                                      std::size_t limit, BudgetMeter& meter) {
  require_same_dimension(a, b);
  return PermutationSearch(a, b, limit, meter).run();
}

std::optional<std::vector<int>> find_coordinate_permutation(const WordSet& a, const WordSet& b,
                                                            Budget budget) {
  BudgetMeter meter(budget, "permutation search");
  auto found = coordinate_permutations(a, b, 1, meter);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<Isometry> stabilizer(const WordSet& m, Budget budget) {
  if (m.empty()) throw std::invalid_argument("stabilizer needs a nonempty set");
  const int n = m.dimension();
  if (n > 24) throw DimensionError("stabilizer search supports n <= 24");
  BudgetMeter meter(budget, "stabilizer search");
  const auto profile = weight_profile(m);
  std::vector<Isometry> out;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
    meter.tick();
    const WordSet target = translate(m, Word(n, t));
    // π preserves weights, so π(M) = M ⊕ t forces equal weight profiles.
    if (weight_profile(target) != profile) continue;
    for (auto& perm : coordinate_permutations(m, target, static_cast<std::size_t>(-1), meter)) {
      out.emplace_back(std::move(perm), Word(n, t));
    }
  }
  return out;
}

WordSet orbit(const Word& x, const std::vector<Isometry>& group) {
  WordSet out(x.dimension());
  for (const auto& g : group) out.insert(g(x));
  return out;
}

TransitivityResult transitivity(const WordSet& m, Budget budget) {
  TransitivityResult r;
  const auto stab = stabilizer(m, budget);
  r.stabilizer_order = stab.size();
  r.orbit = orbit(m[0], stab);
  r.transitive = r.orbit == m;
  return r;
}

bool is_transitive(const WordSet& m, Budget budget) { return transitivity(m, budget).transitive; }

}  // namespace mobiset
