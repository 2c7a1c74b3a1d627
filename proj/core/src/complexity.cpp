#include "dendric/complexity.hpp"

#include <algorithm>
#include <set>

#include "dendric/error.hpp"
#include "dendric/extension.hpp"

namespace dendric {

ComplexityProfile complexity_profile(const LanguageWindow& win) {
  ComplexityProfile profile;
  for (std::size_t n = 0; n <= win.max_len(); ++n)
    profile.p.push_back(win.count(n));
  for (std::size_t n = 0; n < win.max_len(); ++n)
    profile.s.push_back(static_cast<long>(profile.p[n + 1]) -
                        static_cast<long>(profile.p[n]));
  return profile;
}

std::size_t left_degree(const LanguageWindow& win, const Word& w) {
  std::size_t d = 0;
  for (std::size_t a = 0; a < win.alphabet().size(); ++a)
    d += win.contains(concat(Word{static_cast<Letter>(a)}, w));
  return d;
}

std::size_t right_degree(const LanguageWindow& win, const Word& w) {
  std::size_t d = 0;
  for (std::size_t a = 0; a < win.alphabet().size(); ++a)
    d += win.contains(concat(w, Word{static_cast<Letter>(a)}));
  return d;
}

CassaigneReport check_cassaigne_identities(const LanguageWindow& win) {
  if (win.max_len() < 3)
    throw PreconditionError("Cassaigne identities need depth at least 3");
  const auto profile = complexity_profile(win);
  CassaigneReport report;
  for (std::size_t n = 0; n <= win.scan_depth(); ++n) {
    const auto graphs = level_graphs(win, n);
    long right = 0, left = 0, mult = 0;
    std::vector<Word> special;
    for (const auto& g : graphs) {
      right += static_cast<long>(g.right.size()) - 1;
      left += static_cast<long>(g.left.size()) - 1;
      mult += classify(g).multiplicity;
      if (g.left.size() > 1 || g.right.size() > 1) special.push_back(g.word);
    }
    auto fail = [&](std::string identity, long expected, long actual) {
      report.violation = CassaigneViolation{n, std::move(identity), expected,
                                            actual, special};
    };
    const long sn = profile.s[n];
    if (sn != right) {
      fail("right", sn, right);
    } else if (sn != left) {
      fail("left", sn, left);
    } else if (profile.s[n + 1] - sn != mult) {
      fail("multiplicity", profile.s[n + 1] - sn, mult);
    }
    if (report.violation) return report;
    report.checked_up_to = n;
  }
  return report;
}

namespace {

std::size_t degree(const LanguageWindow& win, const Word& w, CodeSide side) {
  return side == CodeSide::suffix ? right_degree(win, w) : left_degree(win, w);
}

// Extensions on the side along which the code grows: a·w for suffix codes,
// w·a for prefix codes.
std::vector<Word> growths(const LanguageWindow& win, const Word& w,
                          CodeSide side) {
  std::vector<Word> out;
  for (std::size_t a = 0; a < win.alphabet().size(); ++a) {
    Word x = side == CodeSide::suffix
                 ? concat(Word{static_cast<Letter>(a)}, w)
                 : concat(w, Word{static_cast<Letter>(a)});
    if (win.contains(x)) out.push_back(std::move(x));
  }
  return out;
}

Word shrink(const Word& w, CodeSide side) {
  return side == CodeSide::suffix ? Word(w.begin() + 1, w.end())
                                  : Word(w.begin(), w.end() - 1);
}

bool is_maximal(const LanguageWindow& win, std::span<const Word> code,
                CodeSide side) {
  return side == CodeSide::suffix ? is_x_maximal_suffix_code(win, code)
                                  : is_x_maximal_prefix_code(win, code);
}

std::vector<Word> normalized(std::vector<Word> code) {
  std::sort(code.begin(), code.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  code.erase(std::unique(code.begin(), code.end()), code.end());
  return code;
}

}  // namespace

CodeBoundReport check_code_bounds(const LanguageWindow& win,
                                  std::span<const Word> code,
                                  std::size_t shortest, std::size_t longest,
                                  BoundMode mode, CodeSide side) {
  if (shortest > longest) throw PreconditionError("empty length range");
  if (longest > win.scan_depth())
    throw PreconditionError("longest code length exceeds scan depth");
  for (const Word& w : code)
    if (w.size() < shortest || w.size() > longest)
      throw PreconditionError("code member '" + display(win.alphabet(), w) +
                              "' outside the length range");
  if (!is_maximal(win, code, side))
    throw PreconditionError("not an x-maximal code");
  const Sign excluded =
      mode == BoundMode::strong_or_neutral ? Sign::weak : Sign::strong;
  const Threshold t = property_threshold(
      win, [excluded](const FactorClass& c) { return c.sign != excluded; });
  if (!t.certified || shortest < t.value)
    throw PreconditionError("shortest length " + std::to_string(shortest) +
                            " is below the property threshold " +
                            std::to_string(t.value));

  const auto profile = complexity_profile(win);
  CodeBoundReport report;
  for (const Word& w : code)
    report.sum += static_cast<long>(degree(win, w, side)) - 1;
  report.at_shortest = profile.s[shortest];
  report.at_longest = profile.s[longest];
  if (mode == BoundMode::strong_or_neutral)
    report.holds = report.at_shortest <= report.sum &&
                   report.sum <= report.at_longest;
  else
    report.holds = report.at_shortest >= report.sum &&
                   report.sum >= report.at_longest;
  return report;
}

std::vector<Word> shorten_longest(const LanguageWindow& win,
                                  std::span<const Word> code, CodeSide side) {
  (void)win;
  std::size_t k = 0;
  for (const Word& w : code) k = std::max(k, w.size());
  if (k == 0) return {code.begin(), code.end()};
  std::vector<Word> out;
  for (const Word& w : code)
    out.push_back(w.size() < k ? w : shrink(w, side));
  return normalized(std::move(out));
}

std::vector<Word> lengthen_shortest(const LanguageWindow& win,
                                    std::span<const Word> code,
                                    CodeSide side) {
  if (code.empty()) return {};
  std::size_t m = code.front().size();
  for (const Word& w : code) m = std::min(m, w.size());
  if (m + 1 > win.max_len())
    throw PreconditionError("cannot lengthen beyond the window depth");
  std::vector<Word> out;
  for (const Word& w : code) {
    if (w.size() > m) {
      out.push_back(w);
    } else {
      for (Word& x : growths(win, w, side)) out.push_back(std::move(x));
    }
  }
  return normalized(std::move(out));
}

std::vector<Word> refine_member(const LanguageWindow& win,
                                std::span<const Word> code, const Word& w,
                                CodeSide side) {
  if (w.size() + 1 > win.max_len())
    throw PreconditionError("cannot refine beyond the window depth");
  std::vector<Word> out;
  bool found = false;
  for (const Word& x : code) {
    if (x == w) {
      found = true;
      for (Word& y : growths(win, w, side)) out.push_back(std::move(y));
    } else {
      out.push_back(x);
    }
  }
  if (!found) throw PreconditionError("word is not a code member");
  return normalized(std::move(out));
}

std::optional<std::vector<Word>> coarsen_member(const LanguageWindow& win,
                                                std::span<const Word> code,
                                                const Word& w, CodeSide side) {
  const auto children = growths(win, w, side);
  std::set<Word> members(code.begin(), code.end());
  for (const Word& c : children)
    if (!members.count(c)) return std::nullopt;
  for (const Word& c : children) members.erase(c);
  members.insert(w);
  return normalized({members.begin(), members.end()});
}

std::vector<Word> random_maximal_code(const LanguageWindow& win,
                                      std::size_t shortest, std::size_t longest,
                                      std::size_t steps, std::mt19937_64& rng,
                                      CodeSide side) {
  if (longest > win.max_len() || shortest > longest)
    throw PreconditionError("invalid length range for a random code");
  auto level = win.level(shortest);
  std::vector<Word> code(level.begin(), level.end());
  for (std::size_t i = 0; i < steps; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, code.size() - 1);
    const Word w = code[pick(rng)];
    if (rng() % 2 == 0) {
      if (w.size() < longest) code = refine_member(win, code, w, side);
    } else if (w.size() > shortest) {
      if (auto c = coarsen_member(win, code, shrink(w, side), side))
        code = std::move(*c);
    }
  }
  return code;
}

}  // namespace dendric
