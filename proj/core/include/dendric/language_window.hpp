#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dendric/word.hpp"

namespace dendric {

/// All factors of length 0..max_len of a bi-infinite word.
///
/// A window is immutable and always factorial-closed and biextendable: every
/// factor of length n < max_len has at least one left and one right extension
/// at length n + 1. Statements about "all factors" made through a window are
/// bounded certificates, valid up to its scan depth max_len - 2 (the longest
/// factor whose extension graph is fully visible).
class LanguageWindow {
 public:
  /// Validates closure and biextendability; levels[n] holds the factors of
  /// length n in any order (duplicates are removed). Throws WindowError.
  LanguageWindow(Alphabet alphabet, std::size_t max_len,
                 std::vector<std::vector<Word>> levels, std::string source);

  /// Factors of a finite sample of the word. The sample must be long enough
  /// that every factor of length <= max_len occurs and recurs; otherwise
  /// validation fails with WindowError.
  static LanguageWindow from_sample(Alphabet alphabet, const Word& sample,
                                    std::size_t max_len, std::string source);

  /// Builds the lower levels from the set of factors of length max_len.
  static LanguageWindow from_top_level(Alphabet alphabet, std::vector<Word> top,
                                       std::size_t max_len, std::string source);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t max_len() const { return max_len_; }
  /// Longest factor length with a complete extension graph.
  std::size_t scan_depth() const { return max_len_ - 2; }
  const std::string& source() const { return source_; }

  /// Factors of length n, sorted lexicographically by letter index.
  std::span<const Word> level(std::size_t n) const;
  std::size_t count(std::size_t n) const { return level(n).size(); }
  bool contains(const Word& w) const;

  /// Index of w within level(|w|), or npos.
  std::size_t index_of(const Word& w) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Same alphabet, depth and factor sets (the source tag is ignored).
  bool same_language(const LanguageWindow& other) const;

 private:
  void validate() const;

  Alphabet alphabet_;
  std::size_t max_len_;
  std::vector<std::vector<Word>> levels_;
  std::string source_;
};

/// Window of the bi-infinite word ^ω u · v^ω.
LanguageWindow window_from_two_sided_periodic(const Alphabet& alphabet,
                                              const Word& u, const Word& v,
                                              std::size_t max_len);

/// Plain-text dump: header `alphabet=<letters> maxlen=<N> source=<tag>`
/// followed by one factor per line, grouped by increasing length (the empty
/// factor is implicit). Requires single-character letter names.
std::string format_window(const LanguageWindow& win);
LanguageWindow parse_window(std::string_view text);

/// True iff `code` is pairwise suffix-incomparable and every factor of
/// length max_len has a member of `code` as a suffix.
bool is_x_maximal_suffix_code(const LanguageWindow& win,
                              std::span<const Word> code);
/// Prefix analogue.
bool is_x_maximal_prefix_code(const LanguageWindow& win,
                              std::span<const Word> code);

}  // namespace dendric
