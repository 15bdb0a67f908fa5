#include "mobiset/word_set.hpp"

#include <algorithm>
#include <string>

namespace mobiset {

WordSet::WordSet(int n) : n_(n) { check_dimension(n); }

WordSet::WordSet(int n, std::vector<std::uint64_t> bits) : n_(n), bits_(std::move(bits)) {
  check_dimension(n);
  const std::uint64_t mask = Word::full_mask(n);
  for (auto b : bits_) {
    if ((b & ~mask) != 0) throw DimensionError("word set member exceeds E^" + std::to_string(n));
  }
  std::sort(bits_.begin(), bits_.end());
  bits_.erase(std::unique(bits_.begin(), bits_.end()), bits_.end());
}

WordSet::WordSet(int n, std::span<const Word> words) : n_(n) {
  check_dimension(n);
  bits_.reserve(words.size());
  for (const auto& w : words) {
    if (w.dimension() != n) throw DimensionError("word of wrong dimension in word set");
    bits_.push_back(w.bits());
  }
  std::sort(bits_.begin(), bits_.end());
  bits_.erase(std::unique(bits_.begin(), bits_.end()), bits_.end());
}

WordSet WordSet::parse(std::initializer_list<std::string_view> words, int n) {
  std::vector<Word> ws;
  for (auto s : words) ws.push_back(Word::from_string(s));
  if (n < 0) {
    if (ws.empty()) throw DimensionError("empty word list needs an explicit dimension");
    n = ws.front().dimension();
  }
  return WordSet(n, std::span<const Word>(ws));
}

bool WordSet::contains_bits(std::uint64_t b) const {
  return std::binary_search(bits_.begin(), bits_.end(), b);
}

bool WordSet::contains(const Word& w) const {
  return w.dimension() == n_ && contains_bits(w.bits());
}

std::vector<Word> WordSet::words() const {
  std::vector<Word> out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.emplace_back(n_, b);
  return out;
}

void WordSet::insert(const Word& w) {
  if (w.dimension() != n_) throw DimensionError("inserting word of wrong dimension");
  auto it = std::lower_bound(bits_.begin(), bits_.end(), w.bits());
  if (it == bits_.end() || *it != w.bits()) bits_.insert(it, w.bits());
}

WordSet subset_by_mask(const WordSet& s, std::uint64_t mask) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < s.size() && i < 64; ++i) {
    if ((mask >> i) & 1U) out.push_back(s.bits()[i]);
  }
  return WordSet(s.dimension(), std::move(out));
}

void require_same_dimension(const WordSet& a, const WordSet& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("word sets in E^" + std::to_string(a.dimension()) + " and E^" +
                         std::to_string(b.dimension()));
  }
}

WordSet set_union(const WordSet& a, const WordSet& b) {
  require_same_dimension(a, b);
  std::vector<std::uint64_t> out;
  std::set_union(a.bits().begin(), a.bits().end(), b.bits().begin(), b.bits().end(),
                 std::back_inserter(out));
  return WordSet(a.dimension(), std::move(out));
}

WordSet set_difference(const WordSet& a, const WordSet& b) {
  require_same_dimension(a, b);
  std::vector<std::uint64_t> out;
  std::set_difference(a.bits().begin(), a.bits().end(), b.bits().begin(), b.bits().end(),
                      std::back_inserter(out));
  return WordSet(a.dimension(), std::move(out));
}

WordSet set_intersection(const WordSet& a, const WordSet& b) {
  require_same_dimension(a, b);
  std::vector<std::uint64_t> out;
  std::set_intersection(a.bits().begin(), a.bits().end(), b.bits().begin(), b.bits().end(),
                        std::back_inserter(out));
  return WordSet(a.dimension(), std::move(out));
}

bool disjoint(const WordSet& a, const WordSet& b) { return set_intersection(a, b).empty(); }

WordSet translate(const WordSet& s, const Word& t) {
  if (t.dimension() != s.dimension()) throw DimensionError("translation vector of wrong dimension");
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (auto b : s.bits()) out.push_back(b ^ t.bits());
  return WordSet(s.dimension(), std::move(out));
}

WordSet complement_words(const WordSet& s) { return translate(s, Word::ones(s.dimension())); }

}  // namespace mobiset
