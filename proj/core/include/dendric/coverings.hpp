#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dendric/language_window.hpp"
#include "dendric/morphism.hpp"

namespace dendric {

/// A minimal covering (w, k) of u: u = σ(w)[k, k + |u|), the first letter of
/// w contributes the start of u and the last letter contributes its end.
struct Covering {
  Word w;
  std::size_t offset = 0;  // k
  Word covered;            // u

  auto operator<=>(const Covering&) const = default;
};

/// Coverings of u by factors of the window. Requires u nonempty and
/// max_len >= |u| + 2.
std::vector<Covering> coverings_of(const Word& u, const Morphism& sigma,
                                   const LanguageWindow& win);

/// Every covering of every image factor of length n, sorted.
std::vector<Covering> enumerate_coverings(const Morphism& sigma,
                                          const LanguageWindow& win,
                                          std::size_t n);

/// c(n): number of coverings (w, k) of image factors of length n, counted
/// without materializing them. Requires n >= 1 and max_len >= n + 2.
std::size_t covering_count(const Morphism& sigma, const LanguageWindow& win,
                           std::size_t n);

/// W_n = { w : |σ(w without its first letter)| < n <= |σ(w)| }, sorted by
/// length then letters. Requires n >= 1 and max_len >= n.
std::vector<Word> build_wn(const Morphism& sigma, const LanguageWindow& win,
                           std::size_t n);

struct CoveringStep {
  std::size_t n = 0;
  long increment = 0;    // c(n+1) - c(n)
  long code_excess = 0;  // Σ_{w ∈ W_n} (|E+(w)| - 1)
  long s = 0;            // s(n)
  /// "=", "<=", ">=" when a comparison with s(n) applied, "" otherwise.
  std::string relation;
};

struct CoveringRecurrenceReport {
  std::vector<CoveringStep> steps;
  std::optional<std::size_t> failed_at;
  std::string failure;
  bool holds() const { return !failed_at; }
};

/// Checks c(n+1) - c(n) = Σ_{w ∈ W_n}(|E+(w)| - 1) for 1 <= n < n_max. When
/// every member of W_n is at least as long as the neutral threshold the
/// increment must equal s(n); above the strong-or-neutral threshold it is
/// at most s(n), above the weak-or-neutral threshold at least s(n).
/// Requires max_len >= n_max + 2.
CoveringRecurrenceReport check_covering_recurrence(const Morphism& sigma,
                                                   const LanguageWindow& win,
                                                   std::size_t n_max);

struct GrowthReport {
  /// d[n - 1] = p_σ(x)(n) - p_x(n) for 1 <= n <= n_max.
  std::vector<long> difference;
  std::size_t argmax = 0;  // first n reaching the maximum
  long max = 0;
  /// d never increases after argmax.
  bool settled = false;
  /// p_σ(x)(n) <= c(n) for every n.
  bool covered = false;
};

/// Complexity of the image against the source up to n_max. Requires
/// max_len >= n_max + 2.
GrowthReport complexity_growth(const Morphism& sigma, const LanguageWindow& win,
                               std::size_t n_max);

}  // namespace dendric
