#include "mobiset/word.hpp"

namespace mobiset {

void check_dimension(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw DimensionError("dimension " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxDimension) + "]");
  }
}

Word::Word(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_dimension(n);
  if ((bits & ~full_mask(n)) != 0) {
    throw DimensionError("word has bits above coordinate " + std::to_string(n - 1));
  }
}

Word Word::from_string(std::string_view text) {
  const int n = static_cast<int>(text.size());
  check_dimension(n);
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    const char c = text[static_cast<std::size_t>(i)];
    if (c == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (c != '0') {
      throw std::invalid_argument("word contains a character other than '0' or '1': " +
                                  std::string(text));
    }
  }
  return Word(n, bits);
}

Word Word::unit(int n, int i) {
  if (i < 0 || i >= n) {
    throw DimensionError("coordinate " + std::to_string(i) + " outside E^" + std::to_string(n));
  }
  return Word(n, std::uint64_t{1} << i);
}

Word Word::flipped(int i) const {
  if (i < 0 || i >= n_) {
    throw DimensionError("coordinate " + std::to_string(i) + " outside E^" + std::to_string(n_));
  }
  Word w = *this;
  w.bits_ ^= std::uint64_t{1} << i;
  return w;
}

std::string Word::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Word operator^(const Word& a, const Word& b) {
  if (a.n_ != b.n_) throw DimensionError("xor of words of different dimension");
  Word w = a;
  w.bits_ ^= b.bits_;
  return w;
}

}  // namespace mobiset
