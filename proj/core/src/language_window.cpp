#include "dendric/language_window.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "dendric/error.hpp"

namespace dendric {

namespace {

void sort_unique(std::vector<Word>& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

std::vector<Word> projections(std::span<const Word> words, bool drop_first) {
  std::vector<Word> out;
  out.reserve(words.size());
  for (const Word& w : words) {
    if (drop_first)
      out.emplace_back(w.begin() + 1, w.end());
    else
      out.emplace_back(w.begin(), w.end() - 1);
  }
  sort_unique(out);
  return out;
}

}  // namespace

LanguageWindow::LanguageWindow(Alphabet alphabet, std::size_t max_len,
                               std::vector<std::vector<Word>> levels,
                               std::string source)
    : alphabet_(std::move(alphabet)),
      max_len_(max_len),
      levels_(std::move(levels)),
      source_(std::move(source)) {
  if (levels_.size() != max_len_ + 1)
    throw WindowError("expected " + std::to_string(max_len_ + 1) +
                      " levels, got " + std::to_string(levels_.size()));
  for (auto& level : levels_) sort_unique(level);
  validate();
}

void LanguageWindow::validate() const {
  if (alphabet_.empty()) throw WindowError("window over an empty alphabet");
  if (max_len_ < 2) throw WindowError("window depth must be at least 2");
  if (levels_[0].size() != 1 || !levels_[0][0].empty())
    throw WindowError("level 0 must be exactly {ε}");
  for (std::size_t n = 0; n <= max_len_; ++n) {
    for (const Word& w : levels_[n]) {
      if (w.size() != n)
        throw WindowError("factor of length " + std::to_string(w.size()) +
                          " stored at level " + std::to_string(n));
      for (Letter a : w)
        if (a >= alphabet_.size())
          throw WindowError("factor uses a letter outside the alphabet");
    }
  }
  // Prefix- and suffix-projections of level n must both equal level n - 1:
  // inclusion is factorial closure, equality is biextendability.
  for (std::size_t n = 1; n <= max_len_; ++n) {
    if (levels_[n].empty())
      throw WindowError("level " + std::to_string(n) + " is empty");
    if (projections(levels_[n], false) != levels_[n - 1])
      throw WindowError("level " + std::to_string(n - 1) +
                        " is not closed or not right-extendable");
    if (projections(levels_[n], true) != levels_[n - 1])
      throw WindowError("level " + std::to_string(n - 1) +
                        " is not closed or not left-extendable");
  }
}

LanguageWindow LanguageWindow::from_sample(Alphabet alphabet,
                                           const Word& sample,
                                           std::size_t max_len,
                                           std::string source) {
  if (sample.size() < max_len)
    throw WindowError("sample shorter than the window depth");
  std::unordered_set<Word, WordHash> top;
  for (std::size_t i = 0; i + max_len <= sample.size(); ++i)
    top.insert(slice(sample, i, max_len));
  return from_top_level(std::move(alphabet), {top.begin(), top.end()}, max_len,
                        std::move(source));
}

LanguageWindow LanguageWindow::from_top_level(Alphabet alphabet,
                                              std::vector<Word> top,
                                              std::size_t max_len,
                                              std::string source) {
  std::vector<std::vector<Word>> levels(max_len + 1);
  sort_unique(top);
  levels[max_len] = std::move(top);
  for (std::size_t n = max_len; n > 0; --n) {
    // Every factor of length n - 1 of a factorial language is a prefix or a
    // suffix of a factor of length n.
    auto lower = projections(levels[n], false);
    auto suffixes = projections(levels[n], true);
    lower.insert(lower.end(), suffixes.begin(), suffixes.end());
    sort_unique(lower);
    levels[n - 1] = std::move(lower);
  }
  return LanguageWindow(std::move(alphabet), max_len, std::move(levels),
                        std::move(source));
}

std::span<const Word> LanguageWindow::level(std::size_t n) const {
  if (n > max_len_)
    throw PreconditionError("level " + std::to_string(n) +
                            " beyond window depth " + std::to_string(max_len_));
  return levels_[n];
}

std::size_t LanguageWindow::index_of(const Word& w) const {
  if (w.size() > max_len_) return npos;
  const auto& level = levels_[w.size()];
  auto it = std::lower_bound(level.begin(), level.end(), w);
  if (it == level.end() || *it != w) return npos;
  return static_cast<std::size_t>(it - level.begin());
}

bool LanguageWindow::contains(const Word& w) const {
  return index_of(w) != npos;
}

bool LanguageWindow::same_language(const LanguageWindow& other) const {
  return alphabet_ == other.alphabet_ && max_len_ == other.max_len_ &&
         levels_ == other.levels_;
}

LanguageWindow window_from_two_sided_periodic(const Alphabet& alphabet,
                                              const Word& u, const Word& v,
                                              std::size_t max_len) {
  if (u.empty() || v.empty())
    throw PreconditionError("periodic blocks must be non-empty");
  if (max_len < 2) throw PreconditionError("window depth must be at least 2");
  const std::size_t left = (max_len + u.size() - 1) / u.size() + 1;
  const std::size_t right = (max_len + v.size() - 1) / v.size() + 1;
  Word sample;
  for (std::size_t i = 0; i < left; ++i)
    sample.insert(sample.end(), u.begin(), u.end());
  for (std::size_t i = 0; i < right; ++i)
    sample.insert(sample.end(), v.begin(), v.end());
  return LanguageWindow::from_sample(
      alphabet, sample, max_len,
      "periodic:" + alphabet.format(u) + "." + alphabet.format(v));
}

std::string format_window(const LanguageWindow& win) {
  const Alphabet& alphabet = win.alphabet();
  if (!alphabet.single_char())
    throw PreconditionError("window dump needs single-character letters");
  std::ostringstream out;
  out << "alphabet=" << alphabet.format([&] {
    Word all;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      all.push_back(static_cast<Letter>(i));
    return all;
  }()) << " maxlen=" << win.max_len()
      << " source=" << win.source() << "\n";
  for (std::size_t n = 1; n <= win.max_len(); ++n)
    for (const Word& w : win.level(n)) out << alphabet.format(w) << "\n";
  return out.str();
}

LanguageWindow parse_window(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty window dump", 1, 1);

  auto field = [&](std::string_view key) -> std::size_t {
    auto pos = header.find(std::string(key) + "=");
    if (pos == std::string::npos)
      throw ParseError("missing '" + std::string(key) + "=' in header", 1, 1);
    return pos + key.size() + 1;
  };
  const std::size_t a_pos = field("alphabet");
  const std::size_t m_pos = field("maxlen");
  const std::size_t s_pos = field("source");
  const std::string letters =
      header.substr(a_pos, header.find(' ', a_pos) - a_pos);
  std::size_t max_len = 0;
  try {
    max_len = std::stoul(header.substr(m_pos, header.find(' ', m_pos) - m_pos));
  } catch (const std::exception&) {
    throw ParseError("maxlen is not a number", 1, m_pos + 1);
  }
  const std::string source = header.substr(s_pos);
  Alphabet alphabet = [&] {
    try {
      return Alphabet::from_chars(letters);
    } catch (const Error& e) {
      throw ParseError(e.what(), 1, a_pos + 1);
    }
  }();

  std::vector<std::vector<Word>> levels(max_len + 1);
  levels[0].push_back({});
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() > max_len)
      throw ParseError("factor longer than maxlen", line_no, 1);
    Word w;
    for (std::size_t i = 0; i < line.size(); ++i) {
      auto a = alphabet.find(std::string_view(&line[i], 1));
      if (!a) throw ParseError("unknown letter", line_no, i + 1);
      w.push_back(*a);
    }
    levels[w.size()].push_back(std::move(w));
  }
  return LanguageWindow(std::move(alphabet), max_len, std::move(levels),
                        source);
}

namespace {

bool is_maximal_code(const LanguageWindow& win, std::span<const Word> code,
                     bool suffix) {
  for (const Word& w : code)
    if (!win.contains(w))
      throw PreconditionError("code element '" +
                              display(win.alphabet(), w) +
                              "' is not a factor of the window");
  auto related = [suffix](const Word& u, const Word& w) {
    return suffix ? is_suffix(u, w) : is_prefix(u, w);
  };
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = 0; j < code.size(); ++j)
      if (i != j && related(code[i], code[j])) return false;

  std::unordered_set<Word, WordHash> members(code.begin(), code.end());
  for (const Word& z : win.level(win.max_len())) {
    bool covered = false;
    for (std::size_t len = 0; len <= z.size() && !covered; ++len) {
      Word part = suffix ? slice(z, z.size() - len, len) : slice(z, 0, len);
      covered = members.count(part) > 0;
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

bool is_x_maximal_suffix_code(const LanguageWindow& win,
                              std::span<const Word> code) {
  return is_maximal_code(win, code, true);
}

bool is_x_maximal_prefix_code(const LanguageWindow& win,
                              std::span<const Word> code) {
  return is_maximal_code(win, code, false);
}

}  // namespace dendric
