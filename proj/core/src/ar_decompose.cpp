#include "dendric/ar_decompose.hpp"

#include <algorithm>
#include <numeric>

namespace dendric {

const char* to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::alphabet_size_mismatch:
      return "alphabetSizeMismatch";
    case RejectReason::periodic_morphism:
      return "periodicMorphism";
    case RejectReason::no_consistent_boundary_letter:
      return "noConsistentBoundaryLetter";
    case RejectReason::peel_factorization_failed:
      return "peelFactorizationFailed";
    case RejectReason::non_bijective_residual:
      return "nonBijectiveResidual";
  }
  return "?";
}

std::string RejectionCertificate::to_string() const {
  std::string out = std::string("REJECT: ") + dendric::to_string(reason);
  out += "\n  morphism: " + at.to_string();
  if (letter) {
    const bool domain_letter = reason == RejectReason::peel_factorization_failed;
    out += "\n  letter: " +
           (domain_letter ? at.domain() : at.codomain()).name(*letter);
  }
  if (!word.empty() || reason == RejectReason::no_consistent_boundary_letter)
    out += "\n  word: " + display(at.codomain(), word);
  if (!detail.empty()) out += "\n  detail: " + detail;
  return out;
}

Morphism ARFactorization::recompose() const {
  Morphism out = coding;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    out = compose(arnoux_rauzy(it->side, it->letter, coding.codomain()), out);
  return out;
}

std::string ARFactorization::to_string() const {
  std::string out = "AR:";
  const Alphabet& b = coding.codomain();
  for (const ARStep& s : steps)
    out += " " + dendric::to_string(s.side) + "_" + b.name(s.letter);
  out += " | coding: ";
  bool identity = coding.domain() == b;
  for (std::size_t a = 0; identity && a < coding.domain().size(); ++a)
    identity = coding.image(static_cast<Letter>(a))[0] == a;
  if (identity) return out + "id";
  for (std::size_t a = 0; a < coding.domain().size(); ++a) {
    if (a) out += ",";
    out += coding.domain().name(static_cast<Letter>(a)) + "->" +
           b.name(coding.image(static_cast<Letter>(a))[0]);
  }
  return out;
}

namespace {

// Decodes img through L_ℓ (left to right over {ℓ, ℓc}) or R_ℓ (right to
// left over {ℓ, cℓ}).
std::optional<Word> decode(const Word& img, Side side, Letter ell) {
  Word out;
  if (side == Side::L) {
    for (std::size_t i = 0; i < img.size();) {
      if (img[i] != ell) return std::nullopt;
      if (i + 1 < img.size() && img[i + 1] != ell) {
        out.push_back(img[i + 1]);
        i += 2;
      } else {
        out.push_back(ell);
        i += 1;
      }
    }
  } else {
    for (std::size_t i = img.size(); i > 0;) {
      if (img[i - 1] != ell) return std::nullopt;
      if (i >= 2 && img[i - 2] != ell) {
        out.push_back(img[i - 2]);
        i -= 2;
      } else {
        out.push_back(ell);
        i -= 1;
      }
    }
    std::reverse(out.begin(), out.end());
  }
  return out;
}

struct Limits {
  Word prefix, suffix;
  Word sp() const { return concat(suffix, prefix); }
};

std::variant<Limits, RejectionCertificate> limits(const Morphism& sigma) {
  try {
    return Limits{limit_prefix(sigma), limit_suffix(sigma)};
  } catch (const PeriodicMorphismError& e) {
    return RejectionCertificate{RejectReason::periodic_morphism, sigma,
                                std::nullopt, e.root(),
                                "every image is a power of one word"};
  }
}

RejectionCertificate peel_failure(const Morphism& sigma,
                                  std::optional<Letter> letter, Word word,
                                  std::string detail) {
  return {RejectReason::peel_factorization_failed, sigma, letter,
          std::move(word), std::move(detail)};
}

std::variant<PeelResult, RejectionCertificate> peel_with(const Morphism& sigma,
                                                         const Limits& lim) {
  const Word sp = lim.sp();
  if (sp.empty())
    throw PreconditionError("peel_step needs a nonempty s_σ p_σ");
  const Letter ell = sp.front();
  if (sp.back() != ell)
    return RejectionCertificate{
        RejectReason::no_consistent_boundary_letter, sigma, std::nullopt, sp,
        "s·p starts with " + sigma.codomain().name(ell) + " and ends with " +
            sigma.codomain().name(sp.back())};
  const Side side =
      !lim.prefix.empty() && lim.prefix.front() == ell ? Side::L : Side::R;

  std::vector<Word> images;
  for (std::size_t a = 0; a < sigma.domain().size(); ++a) {
    const Word& img = sigma.image(static_cast<Letter>(a));
    auto decoded = decode(img, side, ell);
    if (!decoded)
      return peel_failure(sigma, static_cast<Letter>(a), img,
                          "image does not factor through " + to_string(side) +
                              "_" + sigma.codomain().name(ell));
    images.push_back(std::move(*decoded));
  }
  std::vector<bool> used(sigma.codomain().size(), false);
  for (const Word& w : images)
    for (Letter c : w) used[c] = true;
  for (std::size_t c = 0; c < used.size(); ++c)
    if (!used[c])
      return peel_failure(sigma, std::nullopt, {},
                          "letter " +
                              sigma.codomain().name(static_cast<Letter>(c)) +
                              " leaves the image alphabet after peeling");
  Morphism tau(sigma.domain(), sigma.codomain(), std::move(images));

  auto next = limits(tau);
  if (auto* rejection = std::get_if<RejectionCertificate>(&next))
    return *rejection;
  if (std::get<Limits>(next).sp().size() >= sp.size())
    return peel_failure(sigma, std::nullopt, sp, "s·p did not shrink");
  return PeelResult{{side, ell}, std::move(tau)};
}

}  // namespace

std::variant<PeelResult, RejectionCertificate> peel_step(const Morphism& sigma) {
  auto lim = limits(sigma);
  if (auto* rejection = std::get_if<RejectionCertificate>(&lim))
    return *rejection;
  return peel_with(sigma, std::get<Limits>(lim));
}

std::variant<ARFactorization, RejectionCertificate> decompose(
    const Morphism& sigma) {
  if (sigma.domain().size() != sigma.codomain().size())
    return RejectionCertificate{
        RejectReason::alphabet_size_mismatch, sigma, std::nullopt, {},
        std::to_string(sigma.domain().size()) + " domain letters, " +
            std::to_string(sigma.codomain().size()) + " codomain letters"};
  std::vector<ARStep> steps;
  Morphism current = sigma;
  for (;;) {
    auto lim = limits(current);
    if (auto* rejection = std::get_if<RejectionCertificate>(&lim))
      return *rejection;
    const Limits& l = std::get<Limits>(lim);
    if (l.sp().empty()) {
      if (current.is_bijective_coding())
        return ARFactorization{std::move(steps), std::move(current)};
      return RejectionCertificate{RejectReason::non_bijective_residual,
                                  current, std::nullopt, {},
                                  "s·p is empty but the morphism has width " +
                                      std::to_string(current.width())};
    }
    auto peeled = peel_with(current, l);
    if (auto* rejection = std::get_if<RejectionCertificate>(&peeled))
      return *rejection;
    auto& p = std::get<PeelResult>(peeled);
    steps.push_back(p.step);
    current = std::move(p.tau);
  }
}

bool is_sturmian_morphism(const Morphism& sigma) {
  if (sigma.domain().size() != 2)
    throw PreconditionError("Sturmian morphisms act on two letters");
  return std::holds_alternative<ARFactorization>(decompose(sigma));
}

Morphism permutation_coding(const Alphabet& domain, const Alphabet& codomain,
                            const std::vector<Letter>& image) {
  if (domain.size() != codomain.size() || image.size() != domain.size())
    throw PreconditionError("a bijective coding needs alphabets of one size");
  std::vector<Word> images;
  for (Letter b : image) images.push_back({b});
  Morphism m(domain, codomain, std::move(images));
  if (!m.is_bijective_coding())
    throw PreconditionError("coding is not a bijection");
  return m;
}

Morphism random_ar_product(const Alphabet& alphabet, std::size_t steps,
                           std::mt19937_64& rng, bool permute) {
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  Morphism out = Morphism::identity(alphabet);
  for (std::size_t i = 0; i < steps; ++i) {
    const Side side = rng() % 2 == 0 ? Side::L : Side::R;
    out = compose(out, arnoux_rauzy(side, static_cast<Letter>(letter(rng)),
                                    alphabet));
  }
  if (permute) {
    std::vector<Letter> perm(alphabet.size());
    std::iota(perm.begin(), perm.end(), Letter{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    out = compose(out, permutation_coding(alphabet, alphabet, perm));
  }
  return out;
}

}  // namespace dendric
