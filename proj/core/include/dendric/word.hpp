#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dendric {

/// A letter is its index in an Alphabet. Indices define the canonical order.
using Letter = std::uint8_t;

/// A finite word. The empty vector is the empty word.
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Letter a : w) {
      h ^= a;
      h *= 0x100000001b3ull;
    }
    return h ^ w.size();
  }
};

inline Word slice(const Word& w, std::size_t pos, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
              w.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

inline Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

inline bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

inline bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() &&
         std::equal(s.rbegin(), s.rend(), w.rbegin());
}

/// Shortest word v with w = v^k. Returns the empty word for empty input.
Word primitive_root(const Word& w);

/// Ordered set of distinct letter names. Letters are compared by index;
/// names are only used for display and parsing.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 64;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// One letter per character, e.g. "abc".
  static Alphabet from_chars(std::string_view letters);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Letter a) const { return names_.at(a); }

  std::optional<Letter> find(std::string_view name) const;
  /// Throws PreconditionError when the name is unknown.
  Letter letter(std::string_view name) const;

  /// Concatenated letter names; the empty word is rendered as "".
  std::string format(const Word& w) const;
  /// Parses a word written with single-character letter names.
  Word parse(std::string_view text) const;

  /// True when every letter name is exactly one character.
  bool single_char() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// "ε" for the empty word, the concatenated names otherwise.
std::string display(const Alphabet& alphabet, const Word& w);

}  // namespace dendric
