#include "dendric/word.hpp"

#include <unordered_set>

#include "dendric/error.hpp"

namespace dendric {

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return slice(w, 0, p);
  }
  return {};
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw PreconditionError("alphabet must be non-empty");
  if (names_.size() > kMaxSize)
    throw PreconditionError("alphabet larger than " +
                            std::to_string(kMaxSize) + " letters");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw PreconditionError("empty letter name");
    if (!seen.insert(name).second)
      throw PreconditionError("duplicate letter '" + name + "'");
  }
}

Alphabet Alphabet::from_chars(std::string_view letters) {
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view name) const {
  auto a = find(name);
  if (!a) throw PreconditionError("letter '" + std::string(name) +
                                  "' not in alphabet");
  return *a;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (Letter a : w) out += names_.at(a);
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(letter(std::string_view(&c, 1)));
  return w;
}

bool Alphabet::single_char() const {
  for (const auto& name : names_)
    if (name.size() != 1) return false;
  return true;
}

std::string display(const Alphabet& alphabet, const Word& w) {
  return w.empty() ? std::string("ε") : alphabet.format(w);
}

}  // namespace dendric
