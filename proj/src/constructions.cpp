#include "mobiset/constructions.hpp"

#include <bit>
#include <string>

#include "mobiset/hamming.hpp"
#include "mobiset/mobility.hpp"

namespace mobiset {
namespace {

constexpr std::array<std::pair<int, int>, 6> kQuadruplePairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

void check_range(int v, const char* what) {
  if (v < 0 || v > 3) throw std::out_of_range(std::string(what) + " must lie in 0..3");
}

}  // namespace

int star(int j, int t) {
  check_range(j, "star operand");
  check_range(t, "star operand");
  return kStarTable[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
}

int pair_index(int j, int t) {
  if (j == t) throw std::invalid_argument("pair index needs two distinct coordinates");
  return star(j, t) - 1;
}

std::vector<StandardVector> standard_vectors(int k) {
  if (k < 1) throw std::invalid_argument("standard vectors need k >= 1");
  if (4 * k > kMaxDimension) throw DimensionError("4k exceeds the dimension limit");
  const int n = 4 * k;
  std::size_t total = 1;
  for (int q = 0; q < k; ++q) total *= 6;

  std::vector<StandardVector> out;
  out.reserve(total);
  std::vector<int> digit(static_cast<std::size_t>(k), 0);
  for (std::size_t count = 0; count < total; ++count) {
    StandardVector v;
    std::uint64_t bits = 0;
    int index = 0;
    for (int q = 0; q < k; ++q) {
      const auto [j, t] = kQuadruplePairs[static_cast<std::size_t>(digit[static_cast<std::size_t>(q)])];
      bits |= (std::uint64_t{1} << (4 * q + j)) | (std::uint64_t{1} << (4 * q + t));
      v.pairs.emplace_back(j, t);
      index += pair_index(j, t);
    }
    v.word = Word(n, bits);
    v.index = index % 3;
    out.push_back(std::move(v));
    // Odometer with quadruple k-1 as the fastest digit.
    for (int q = k - 1; q >= 0; --q) {
      auto& d = digit[static_cast<std::size_t>(q)];
      if (++d < 6) break;
      d = 0;
    }
  }
  return out;
}

int standard_index(const Word& w) {
  if (w.dimension() % 4 != 0 || w.dimension() == 0) {
    throw std::invalid_argument("standard words live in E^{4k}");
  }
  int index = 0;
  for (int q = 0; q < w.dimension() / 4; ++q) {
    const auto nibble = static_cast<unsigned>((w.bits() >> (4 * q)) & 0xFU);
    if (std::popcount(nibble) != 2) throw std::invalid_argument("word is not a standard vector");
    const int j = std::countr_zero(nibble);
    const int t = 31 - std::countl_zero(nibble);
    index += pair_index(j, t);
  }
  return index % 3;
}

std::array<WordSet, 3> standard_partition(int k) {
  std::array<std::vector<std::uint64_t>, 3> parts;
  for (const auto& v : standard_vectors(k)) {
    parts[static_cast<std::size_t>(v.index)].push_back(v.word.bits());
  }
  const int n = 4 * k;
  return {WordSet(n, std::move(parts[0])), WordSet(n, std::move(parts[1])),
          WordSet(n, std::move(parts[2]))};
}

WordSet theorem_ms(int k) {
  if (k < 2) throw std::invalid_argument("theorem_ms needs k >= 2");
  return puncture(standard_partition(k)[0]);
}

SetPair linear_ms(int m) {
  if (m < 1) throw std::invalid_argument("linear_ms needs m >= 1");
  if (2 * m + 1 > kMaxDimension) throw DimensionError("2m+1 exceeds the dimension limit");
  const int n = 2 * m + 1;
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    const auto p = static_cast<std::uint64_t>(std::popcount(x) & 1);
    const std::uint64_t base = x | (x << m);
    a.push_back(base | (p << (2 * m)));
    b.push_back(base | ((p ^ 1U) << (2 * m)));
  }
  return {WordSet(n, std::move(a)), WordSet(n, std::move(b))};
}

WordSet hamming_code(int r) {
  if (r < 2) throw std::invalid_argument("hamming_code needs r >= 2");
  if (r > 6) throw DimensionError("2^r - 1 exceeds the dimension limit");
  const int n = (1 << r) - 1;
  // Generate the code as the kernel of the parity-check matrix by enumerating the
  // information coordinates: the r coordinates 2^s - 1 carry the check bits.
  std::vector<int> info;
  for (int c = 0; c < n; ++c) {
    if (std::popcount(static_cast<unsigned>(c + 1)) != 1) info.push_back(c);
  }
  std::vector<std::uint64_t> words;
  const std::size_t count = std::size_t{1} << info.size();
  words.reserve(count);
  for (std::size_t msg = 0; msg < count; ++msg) {
    std::uint64_t w = 0;
    unsigned syndrome = 0;
    for (std::size_t b = 0; b < info.size(); ++b) {
      if ((msg >> b) & 1U) {
        w |= std::uint64_t{1} << info[b];
        syndrome ^= static_cast<unsigned>(info[b] + 1);
      }
    }
    for (int s = 0; s < r; ++s) {
      if ((syndrome >> s) & 1U) w |= std::uint64_t{1} << ((1 << s) - 1);
    }
    words.push_back(w);
  }
  return WordSet(n, std::move(words));
}

bool is_perfect_code(const WordSet& c) {
  const int n = c.dimension();
  if (n > 30 || !is_one_code(c)) return false;
  return c.size() * static_cast<std::size_t>(n + 1) == (std::size_t{1} << n);
}

SetPair perfect_pair(const WordSet& code, int i) {
  if (!is_perfect_code(code)) throw std::invalid_argument("perfect_pair needs a 1-perfect code");
  return {code, translate(code, Word::unit(code.dimension(), i))};
}

SetPair linear_extension(const WordSet& m, const WordSet& alt) {
  require_same_dimension(m, alt);
  const int n = m.dimension();
  if (n + 2 > kMaxDimension) throw DimensionError("lift exceeds the dimension limit");
  const std::uint64_t tail = std::uint64_t{3} << n;
  std::vector<std::uint64_t> r;
  std::vector<std::uint64_t> r_alt;
  for (auto b : m.bits()) {
    r.push_back(b);
    r_alt.push_back(b | tail);
  }
  for (auto b : alt.bits()) {
    r.push_back(b | tail);
    r_alt.push_back(b);
  }
  return {WordSet(n + 2, std::move(r)), WordSet(n + 2, std::move(r_alt))};
}

SetPair linear_extension_verified(const WordSet& m, const WordSet& alt) {
  require_same_dimension(m, alt);
  if (m.dimension() == 0 || !ems_conditions(m, alt, m.dimension() - 1).all()) {
    throw std::invalid_argument("lift input is not an extended mobile pair");
  }
  return linear_extension(m, alt);
}

SetPair linear_ems_iterated_pair(int m) {
  if (m < 0) throw std::invalid_argument("iteration count must be nonnegative");
  if (2 * m + 2 > kMaxDimension) throw DimensionError("2m+2 exceeds the dimension limit");
  SetPair current{WordSet::parse({"00"}), WordSet::parse({"11"})};
  for (int step = 0; step < m; ++step) current = linear_extension(current.first, current.second);
  return current;
}

WordSet linear_ems_iterated(int m) { return linear_ems_iterated_pair(m).first; }

Word grid_shift(const Word& w, int dr, int dc) {
  if (w.dimension() != 9) throw DimensionError("grid words live in E^9");
  std::uint64_t out = 0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (w[3 * r + c]) out |= std::uint64_t{1} << (3 * ((r + dr) % 3) + (c + dc) % 3);
    }
  }
  return Word(9, out);
}

SetPair grid36() {
  WordSet m(9);
  for (const char* base : kGrid36Base) {
    const Word w = Word::from_string(base);
    for (int dr = 0; dr < 3; ++dr) {
      for (int dc = 0; dc < 3; ++dc) m.insert(grid_shift(w, dr, dc));
    }
  }
  return {m, complement_words(m)};
}

WordSet icomponent_from_pair(const WordSet& m, const WordSet& alt) {
  require_same_dimension(m, alt);
  const int n = m.dimension();
  if (n + 2 > kMaxDimension) throw DimensionError("i-component exceeds the dimension limit");
  std::vector<std::uint64_t> out;
  auto add = [&](std::uint64_t b, std::uint64_t last) {
    const auto p = static_cast<std::uint64_t>(std::popcount(b) & 1);
    out.push_back(b | (p << n) | (last << (n + 1)));
  };
  for (auto b : m.bits()) add(b, 0);
  for (auto b : alt.bits()) add(b, 1);
  return WordSet(n + 2, std::move(out));
}

IComponentParts pair_from_icomponent(const WordSet& m) {
  const int n = m.dimension() - 2;
  if (n < 0) throw DimensionError("i-component decomposition needs dimension >= 2");
  std::array<std::array<std::vector<std::uint64_t>, 2>, 2> raw;
  const std::uint64_t low = Word::full_mask(n);
  for (auto b : m.bits()) {
    const std::uint64_t x = b & low;
    const auto check = static_cast<unsigned>((b >> n) & 1U);
    const auto last = static_cast<unsigned>((b >> (n + 1)) & 1U);
    const unsigned a = check ^ static_cast<unsigned>(std::popcount(x) & 1);
    raw[a][last].push_back(x);
  }
  IComponentParts out{{{{WordSet(n), WordSet(n)}, {WordSet(n), WordSet(n)}}}};
  for (unsigned a = 0; a < 2; ++a) {
    for (unsigned b = 0; b < 2; ++b) out.parts[a][b] = WordSet(n, std::move(raw[a][b]));
  }
  return out;
}

}  // namespace mobiset
