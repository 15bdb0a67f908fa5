#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mobiset/word_set.hpp"

namespace mobiset {

/// Malformed word-list text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One word per line over {'0','1'}; '#' starts a comment; blank lines are skipped.
/// A comment of the exact form "# n=<d>" fixes the dimension, which lets empty sets
/// round-trip. Duplicate words and unequal lengths are errors.
[[nodiscard]] WordSet parse_word_list(std::string_view text);
[[nodiscard]] std::string serialize_word_list(const WordSet& s);

[[nodiscard]] WordSet read_word_list(const std::filesystem::path& path);
void write_word_list(const std::filesystem::path& path, const WordSet& s);

}  // namespace mobiset
