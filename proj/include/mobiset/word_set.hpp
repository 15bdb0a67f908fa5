#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string_view>
#include <vector>

#include "mobiset/word.hpp"

namespace mobiset {

/// A finite set of words of one dimension, kept sorted by numeric value.
class WordSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Word;

    const_iterator() = default;
    const_iterator(int n, std::vector<std::uint64_t>::const_iterator it) : n_(n), it_(it) {}

    Word operator*() const { return Word(n_, *it_); }
    const_iterator& operator++() { ++it_; return *this; }
    const_iterator operator++(int) { auto c = *this; ++it_; return c; }
    const_iterator& operator--() { --it_; return *this; }
    const_iterator operator+(difference_type d) const { return {n_, it_ + d}; }
    difference_type operator-(const const_iterator& o) const { return it_ - o.it_; }
    bool operator==(const const_iterator& o) const { return it_ == o.it_; }

   private:
    int n_ = 0;
    std::vector<std::uint64_t>::const_iterator it_;
  };

  explicit WordSet(int n = 0);
  /// Builds a set from raw bit patterns; duplicates merge.
  WordSet(int n, std::vector<std::uint64_t> bits);
  WordSet(int n, std::span<const Word> words);

  /// Convenience for tests and literals: {"1100", "0011"}. An empty list needs `n`.
  static WordSet parse(std::initializer_list<std::string_view> words, int n = -1);

  [[nodiscard]] int dimension() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }
  [[nodiscard]] const std::vector<std::uint64_t>& bits() const noexcept { return bits_; }
  [[nodiscard]] Word operator[](std::size_t i) const { return Word(n_, bits_[i]); }

  [[nodiscard]] bool contains(const Word& w) const;
  [[nodiscard]] bool contains_bits(std::uint64_t b) const;
  [[nodiscard]] std::vector<Word> words() const;

  void insert(const Word& w);

  [[nodiscard]] const_iterator begin() const { return {n_, bits_.begin()}; }
  [[nodiscard]] const_iterator end() const { return {n_, bits_.end()}; }

  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> bits_;
};

/// Index-based subset: bit b of `mask` selects the b-th word in sorted order.
[[nodiscard]] WordSet subset_by_mask(const WordSet& s, std::uint64_t mask);

[[nodiscard]] WordSet set_union(const WordSet& a, const WordSet& b);
[[nodiscard]] WordSet set_difference(const WordSet& a, const WordSet& b);
[[nodiscard]] WordSet set_intersection(const WordSet& a, const WordSet& b);
[[nodiscard]] bool disjoint(const WordSet& a, const WordSet& b);

/// S ⊕ t.
[[nodiscard]] WordSet translate(const WordSet& s, const Word& t);
/// Inverts every coordinate of every word.
[[nodiscard]] WordSet complement_words(const WordSet& s);

void require_same_dimension(const WordSet& a, const WordSet& b);

}  // namespace mobiset
