#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dendric/error.hpp"
#include "dendric/language_window.hpp"

namespace dendric {

/// Non-erasing morphism from domain* to codomain*. The codomain is minimal:
/// every codomain letter occurs in some image.
class Morphism {
 public:
  /// Throws PreconditionError on an erasing image, a letter outside the
  /// codomain, or a codomain letter that no image uses.
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

  /// Text form `a->ab;b->a`: semicolon-separated rules, `->` separator,
  /// single-character letters, whitespace ignored. The domain is ordered by
  /// rule; the codomain lists the used domain letters first (domain order),
  /// then new letters by first occurrence. Throws ParseError.
  static Morphism parse(std::string_view text);

  /// Images given over an ambient alphabet; the codomain becomes the subset
  /// of ambient letters actually used, in ambient order.
  static Morphism with_minimal_codomain(Alphabet domain, const Alphabet& ambient,
                                        const std::vector<Word>& images);

  static Morphism identity(const Alphabet& alphabet);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  const Word& image(Letter a) const { return images_.at(a); }
  std::span<const Word> images() const { return images_; }

  Word apply(const Word& w) const;
  /// Longest image length.
  std::size_t width() const;
  /// Sum of image lengths.
  std::size_t total_length() const;
  bool is_coding() const { return width() == 1; }
  bool is_bijective_coding() const;
  /// Domain and codomain carry the same letter names in the same order.
  bool is_endomorphism() const { return domain_ == codomain_; }

  std::string to_string() const;

  bool operator==(const Morphism&) const = default;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
};

/// outer ∘ inner. Inner codomain letters are matched to outer domain
/// letters by name; the result's codomain is re-minimized.
Morphism compose(const Morphism& outer, const Morphism& inner);

enum class Side { L, R };

/// L_ℓ: ℓ ↦ ℓ, a ↦ ℓa;  R_ℓ: ℓ ↦ ℓ, a ↦ aℓ  (a ≠ ℓ).
Morphism arnoux_rauzy(Side side, Letter ell, const Alphabet& alphabet);

std::string to_string(Side side);

/// Window of σ(x) up to max_len from a window of x of depth >= max_len + 2.
LanguageWindow apply_to_window(const Morphism& sigma, const LanguageWindow& win,
                               std::size_t max_len);

/// Window of the language generated by an endomorphism from `seed`: the
/// factor sets of σⁿ(seed) are iterated until two consecutive iterations
/// agree and form a valid window. Throws PreconditionError when that does
/// not happen within iter_cap iterations.
LanguageWindow window_from_substitutive(const Morphism& sigma, Letter seed,
                                        std::size_t max_len,
                                        std::size_t iter_cap = 50);

/// All images are powers of one primitive word: limit prefix and suffix
/// are undefined.
class PeriodicMorphismError : public Error {
 public:
  PeriodicMorphismError(const Alphabet& codomain, Word root)
      : Error("periodic morphism: every image is a power of " +
              codomain.format(root)),
        root_(std::move(root)) {}
  const Word& root() const { return root_; }

 private:
  Word root_;
};

/// Longest common prefix of all σ(a)^ω. Throws PeriodicMorphismError.
Word limit_prefix(const Morphism& sigma);
/// Longest common suffix of all ^ωσ(a). Throws PeriodicMorphismError.
Word limit_suffix(const Morphism& sigma);

struct AntecedentReport {
  Word prefix;  // p_σ
  Word suffix;  // s_σ
  /// prefix_antecedents[b]: letters a with p_σ·b a prefix of σ(a)·p_σ.
  std::vector<std::vector<Letter>> prefix_antecedents;
  /// suffix_antecedents[b]: letters a with b·s_σ a suffix of s_σ·σ(a).
  std::vector<std::vector<Letter>> suffix_antecedents;

  /// Codomain letters with two or more antecedents on either side.
  std::vector<Letter> ambiguous() const;
  bool unique() const { return ambiguous().empty(); }
};

AntecedentReport check_antecedent_uniqueness(const Morphism& sigma);

}  // namespace dendric
