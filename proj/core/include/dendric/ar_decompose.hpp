#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "dendric/morphism.hpp"

namespace dendric {

enum class RejectReason {
  alphabet_size_mismatch,
  periodic_morphism,
  no_consistent_boundary_letter,
  peel_factorization_failed,
  non_bijective_residual,
};

/// camelCase name used in reports, e.g. "nonBijectiveResidual".
const char* to_string(RejectReason reason);

/// Why a morphism is not a product of Arnoux-Rauzy morphisms and a
/// bijective coding. `at` is the morphism left after the peeled steps.
struct RejectionCertificate {
  RejectReason reason;
  Morphism at;
  /// The boundary letter or the domain letter whose image failed.
  std::optional<Letter> letter;
  /// s·p, the failing image or the common primitive root.
  Word word;
  std::string detail;

  std::string to_string() const;
};

struct ARStep {
  Side side;
  Letter letter;  // over the codomain

  bool operator==(const ARStep&) const = default;
};

/// σ = step_1 ∘ ... ∘ step_m ∘ coding with a bijective coding innermost.
struct ARFactorization {
  std::vector<ARStep> steps;
  Morphism coding;

  Morphism recompose() const;
  /// `AR: L_0 R_1 | coding: id` or `... | coding: a->b,b->a`.
  std::string to_string() const;
};

struct PeelResult {
  ARStep step;
  Morphism tau;
};

/// One peel: σ = L_ℓ ∘ τ or σ = R_ℓ ∘ τ with |s_τ p_τ| < |s_σ p_σ|.
/// Requires p_σ and s_σ defined and s_σ p_σ nonempty.
std::variant<PeelResult, RejectionCertificate> peel_step(const Morphism& sigma);

/// Factorization over the Arnoux-Rauzy monoid, or a rejection.
std::variant<ARFactorization, RejectionCertificate> decompose(
    const Morphism& sigma);

/// Requires a 2-letter domain.
bool is_sturmian_morphism(const Morphism& sigma);

/// The bijective coding a ↦ image[a] between two alphabets of equal size.
Morphism permutation_coding(const Alphabet& domain, const Alphabet& codomain,
                            const std::vector<Letter>& image);

/// Random product of `steps` Arnoux-Rauzy generators on `alphabet`,
/// composed on the inside with a random permutation when `permute` is set.
Morphism random_ar_product(const Alphabet& alphabet, std::size_t steps,
                           std::mt19937_64& rng, bool permute = true);

}  // namespace dendric
