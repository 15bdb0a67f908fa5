#include "mobiset/word_list.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace mobiset {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<int> dimension_header(std::string_view comment) {
  comment = trim(comment);
  if (!comment.starts_with("n=")) return std::nullopt;
  const auto digits = comment.substr(2);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return n;
}

}  // namespace

WordSet parse_word_list(std::string_view text) {
  std::optional<int> declared;
  std::optional<int> inferred;
  std::vector<Word> words;
  std::unordered_set<std::uint64_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      if (trim(line.substr(0, hash)).empty()) {
        if (auto n = dimension_header(line.substr(hash + 1))) {
          if (declared && *declared != *n) throw ParseError("conflicting dimension headers", line_no);
          declared = n;
        }
      }
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    Word w;
    try {
      w = Word::from_string(line);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!inferred) inferred = w.dimension();
    if (w.dimension() != *inferred) throw ParseError("word length differs from the first word", line_no);
    if (declared && *declared != w.dimension()) {
      throw ParseError("word length disagrees with the dimension header", line_no);
    }
    if (!seen.insert(w.bits()).second) throw ParseError("duplicate word " + std::string(line), line_no);
    words.push_back(w);
  }
  if (declared && inferred && *declared != *inferred) {
    throw ParseError("dimension header disagrees with word length", 0);
  }
  if (!declared && !inferred) throw ParseError("no words and no dimension header", 0);
  const int n = inferred ? *inferred : *declared;
  try {
    return WordSet(n, std::span<const Word>(words));
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string serialize_word_list(const WordSet& s) {
  std::string out = "# n=" + std::to_string(s.dimension()) + "\n";
  for (const auto& w : s) {
    out += w.to_string();
    out += '\n';
  }
  return out;
}

WordSet read_word_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_word_list(buf.str());
}

void write_word_list(const std::filesystem::path& path, const WordSet& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_word_list(s);
}

}  // namespace mobiset
