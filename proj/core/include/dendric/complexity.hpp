#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dendric/language_window.hpp"

namespace dendric {

/// p(n) = |L_n| for n <= max_len and s(n) = p(n+1) - p(n) for n < max_len.
struct ComplexityProfile {
  std::vector<std::size_t> p;
  std::vector<long> s;
};

ComplexityProfile complexity_profile(const LanguageWindow& win);

std::size_t left_degree(const LanguageWindow& win, const Word& w);
std::size_t right_degree(const LanguageWindow& win, const Word& w);

struct CassaigneViolation {
  std::size_t n = 0;
  /// "right", "left" or "multiplicity".
  std::string identity;
  long expected = 0;  // the complexity side
  long actual = 0;    // the sum over L_n
  /// Special factors of length n (the terms that could be wrong).
  std::vector<Word> offending;
};

struct CassaigneReport {
  std::size_t checked_up_to = 0;
  std::optional<CassaigneViolation> violation;
  bool holds() const { return !violation; }
};

/// For n <= max_len - 2 checks
///   s(n) = Σ (|E+(w)| - 1) = Σ (|E-(w)| - 1)  and  s(n+1) - s(n) = Σ m(w)
/// over w in L_n. Reports the smallest violating n. Requires max_len >= 3.
CassaigneReport check_cassaigne_identities(const LanguageWindow& win);

enum class BoundMode { strong_or_neutral, weak_or_neutral };
enum class CodeSide { suffix, prefix };

struct CodeBoundReport {
  long sum = 0;          // Σ (|E(w)| - 1) over the code, E = E+ or E-
  long at_shortest = 0;  // s(K)
  long at_longest = 0;   // s(M)
  bool holds = false;
};

/// Sum of extension excesses of an x-maximal code with lengths in
/// [shortest, longest], compared against s(shortest) and s(longest).
///
/// strong_or_neutral: s(K) <= Σ <= s(M); weak_or_neutral: s(K) >= Σ >= s(M).
/// Suffix codes use right extensions, prefix codes left extensions.
/// Throws PreconditionError when the code is not x-maximal, a length is out
/// of range, longest > scan depth, or shortest is below the window's
/// threshold for the chosen property.
CodeBoundReport check_code_bounds(const LanguageWindow& win,
                                  std::span<const Word> code,
                                  std::size_t shortest, std::size_t longest,
                                  BoundMode mode,
                                  CodeSide side = CodeSide::suffix);

inline CodeBoundReport check_suffix_code_bounds(const LanguageWindow& win,
                                                std::span<const Word> code,
                                                std::size_t shortest,
                                                std::size_t longest,
                                                BoundMode mode) {
  return check_code_bounds(win, code, shortest, longest, mode,
                           CodeSide::suffix);
}

// Maximal-code rewrites. Each maps an x-maximal code to an x-maximal code.

/// Replaces every longest member a·w by w.
std::vector<Word> shorten_longest(const LanguageWindow& win,
                                  std::span<const Word> code,
                                  CodeSide side = CodeSide::suffix);
/// Replaces every shortest member w by its extensions a·w.
std::vector<Word> lengthen_shortest(const LanguageWindow& win,
                                    std::span<const Word> code,
                                    CodeSide side = CodeSide::suffix);
/// Replaces the single member w by its extensions.
std::vector<Word> refine_member(const LanguageWindow& win,
                                std::span<const Word> code, const Word& w,
                                CodeSide side = CodeSide::suffix);
/// Replaces all extensions of w (which must all be members) by w.
std::optional<std::vector<Word>> coarsen_member(const LanguageWindow& win,
                                                std::span<const Word> code,
                                                const Word& w,
                                                CodeSide side = CodeSide::suffix);

/// Random x-maximal code with lengths in [shortest, longest], obtained from
/// L_shortest by `steps` random refinements and coarsenings.
std::vector<Word> random_maximal_code(const LanguageWindow& win,
                                      std::size_t shortest, std::size_t longest,
                                      std::size_t steps, std::mt19937_64& rng,
                                      CodeSide side = CodeSide::suffix);

}  // namespace dendric
