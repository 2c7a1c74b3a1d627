#include "dendric/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace dendric {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (images_.size() != domain_.size())
    throw PreconditionError("one image per domain letter required");
  std::vector<bool> used(codomain_.size(), false);
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty())
      throw PreconditionError("erasing image for letter '" +
                              domain_.name(static_cast<Letter>(a)) + "'");
    for (Letter b : images_[a]) {
      if (b >= codomain_.size())
        throw PreconditionError("image letter outside the codomain");
      used[b] = true;
    }
  }
  for (std::size_t b = 0; b < used.size(); ++b)
    if (!used[b])
      throw PreconditionError("codomain letter '" +
                              codomain_.name(static_cast<Letter>(b)) +
                              "' occurs in no image");
}

Morphism Morphism::with_minimal_codomain(Alphabet domain,
                                         const Alphabet& ambient,
                                         const std::vector<Word>& images) {
  std::vector<bool> used(ambient.size(), false);
  for (const Word& w : images)
    for (Letter b : w) used.at(b) = true;
  std::vector<std::string> names;
  std::vector<Letter> remap(ambient.size(), 0);
  for (std::size_t b = 0; b < ambient.size(); ++b) {
    if (!used[b]) continue;
    remap[b] = static_cast<Letter>(names.size());
    names.push_back(ambient.name(static_cast<Letter>(b)));
  }
  std::vector<Word> out = images;
  for (Word& w : out)
    for (Letter& b : w) b = remap[b];
  return Morphism(std::move(domain), Alphabet(std::move(names)),
                  std::move(out));
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    images.push_back({static_cast<Letter>(a)});
  return Morphism(alphabet, alphabet, std::move(images));
}

Morphism Morphism::parse(std::string_view text) {
  // Tokenize into visible characters with their positions.
  struct Token {
    char c;
    std::size_t line, column;
  };
  std::vector<Token> tokens;
  std::size_t line = 1, column = 1;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      column = 1;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c)))
      tokens.push_back({c, line, column});
    ++column;
  }
  if (tokens.empty()) throw ParseError("empty morphism", 1, 1);

  std::vector<std::string> domain_names;
  std::vector<std::string> image_texts;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& head = tokens[i];
    if (head.c == ';') throw ParseError("empty rule", head.line, head.column);
    const std::string name(1, head.c);
    if (std::find(domain_names.begin(), domain_names.end(), name) !=
        domain_names.end())
      throw ParseError("duplicate rule for '" + name + "'", head.line,
                       head.column);
    ++i;
    if (i + 1 >= tokens.size() || tokens[i].c != '-' ||
        tokens[i + 1].c != '>') {
      const Token& at = i < tokens.size() ? tokens[i] : tokens.back();
      throw ParseError("expected '->'", at.line,
                       i < tokens.size() ? at.column : at.column + 1);
    }
    i += 2;
    std::string image;
    while (i < tokens.size() && tokens[i].c != ';') image += tokens[i++].c;
    if (image.empty()) {
      const Token& at = tokens[std::min(i, tokens.size() - 1)];
      throw ParseError("empty image for '" + name + "' (erasing morphism)",
                       at.line, at.column);
    }
    domain_names.push_back(name);
    image_texts.push_back(std::move(image));
    if (i < tokens.size()) ++i;  // ';'
  }

  std::vector<std::string> codomain_names;
  auto seen = [&](const std::string& s) {
    return std::find(codomain_names.begin(), codomain_names.end(), s) !=
           codomain_names.end();
  };
  std::unordered_set<char> used;
  for (const auto& img : image_texts) used.insert(img.begin(), img.end());
  for (const auto& name : domain_names)
    if (used.count(name[0])) codomain_names.push_back(name);
  for (const auto& img : image_texts)
    for (char c : img)
      if (!seen(std::string(1, c))) codomain_names.emplace_back(1, c);

  Alphabet domain(domain_names);
  Alphabet codomain(codomain_names);
  std::vector<Word> images;
  for (const auto& img : image_texts) images.push_back(codomain.parse(img));
  return Morphism(std::move(domain), std::move(codomain), std::move(images));
}

Word Morphism::apply(const Word& w) const {
  Word out;
  for (Letter a : w) {
    const Word& img = images_.at(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

std::size_t Morphism::width() const {
  std::size_t m = 0;
  for (const Word& img : images_) m = std::max(m, img.size());
  return m;
}

std::size_t Morphism::total_length() const {
  std::size_t t = 0;
  for (const Word& img : images_) t += img.size();
  return t;
}

bool Morphism::is_bijective_coding() const {
  if (!is_coding() || domain_.size() != codomain_.size()) return false;
  std::vector<bool> hit(codomain_.size(), false);
  for (const Word& img : images_) {
    if (hit[img[0]]) return false;
    hit[img[0]] = true;
  }
  return true;
}

std::string Morphism::to_string() const {
  std::string out;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (a) out += ';';
    out += domain_.name(static_cast<Letter>(a)) + "->" +
           codomain_.format(images_[a]);
  }
  return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  std::vector<Letter> to_outer;
  for (const auto& name : inner.codomain().names()) {
    auto a = outer.domain().find(name);
    if (!a)
      throw PreconditionError("cannot compose: letter '" + name +
                              "' is not in the outer domain");
    to_outer.push_back(*a);
  }
  std::vector<Word> images;
  for (const Word& img : inner.images()) {
    Word out;
    for (Letter c : img) {
      const Word& part = outer.image(to_outer[c]);
      out.insert(out.end(), part.begin(), part.end());
    }
    images.push_back(std::move(out));
  }
  return Morphism::with_minimal_codomain(inner.domain(), outer.codomain(),
                                         images);
}

Morphism arnoux_rauzy(Side side, Letter ell, const Alphabet& alphabet) {
  if (ell >= alphabet.size())
    throw PreconditionError("Arnoux-Rauzy letter not in the alphabet");
  std::vector<Word> images;
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    const auto x = static_cast<Letter>(a);
    if (x == ell)
      images.push_back({ell});
    else if (side == Side::L)
      images.push_back({ell, x});
    else
      images.push_back({x, ell});
  }
  return Morphism(alphabet, alphabet, std::move(images));
}

std::string to_string(Side side) { return side == Side::L ? "L" : "R"; }

LanguageWindow apply_to_window(const Morphism& sigma, const LanguageWindow& win,
                               std::size_t max_len) {
  if (!(sigma.domain() == win.alphabet()))
    throw PreconditionError("morphism domain differs from the window alphabet");
  if (max_len < 2) throw PreconditionError("image depth must be at least 2");
  if (win.max_len() < max_len + 2)
    throw PreconditionError("source window depth " +
                            std::to_string(win.max_len()) + " < " +
                            std::to_string(max_len + 2));
  // Every image factor of length n has a covering (w, k) with |w| <= n, and
  // w extends to the right inside the window, so images of L_n suffice.
  std::unordered_set<Word, WordHash> top;
  for (const Word& w : win.level(max_len)) {
    const Word img = sigma.apply(w);
    for (std::size_t i = 0; i + max_len <= img.size(); ++i)
      top.insert(slice(img, i, max_len));
  }
  return LanguageWindow::from_top_level(
      sigma.codomain(), {top.begin(), top.end()}, max_len,
      "image(" + sigma.to_string() + "," + win.source() + ")");
}

LanguageWindow window_from_substitutive(const Morphism& sigma, Letter seed,
                                        std::size_t max_len,
                                        std::size_t iter_cap) {
  constexpr std::size_t kMaxSample = std::size_t{1} << 26;
  if (!sigma.is_endomorphism())
    throw PreconditionError("substitutive windows need an endomorphism");
  if (seed >= sigma.domain().size())
    throw PreconditionError("seed letter not in the alphabet");
  if (max_len < 2) throw PreconditionError("window depth must be at least 2");

  Word current{seed};
  std::vector<Word> previous_top;
  bool have_previous = false;
  for (std::size_t iter = 0; iter < iter_cap; ++iter) {
    current = sigma.apply(current);
    if (current.size() > kMaxSample) break;
    if (current.size() < max_len) continue;
    std::unordered_set<Word, WordHash> top_set;
    for (std::size_t i = 0; i + max_len <= current.size(); ++i)
      top_set.insert(slice(current, i, max_len));
    std::vector<Word> top(top_set.begin(), top_set.end());
    std::sort(top.begin(), top.end());
    if (have_previous && top == previous_top) {
      try {
        return LanguageWindow::from_sample(
            sigma.domain(), current, max_len,
            "substitutive:" + sigma.to_string() + "@" +
                sigma.domain().name(seed));
      } catch (const WindowError&) {
        // Not yet recurrent enough; keep iterating.
      }
    }
    previous_top = std::move(top);
    have_previous = true;
  }
  throw PreconditionError("no saturation of σⁿ(" + sigma.domain().name(seed) +
                          ") within " + std::to_string(iter_cap) +
                          " iterations");
}

namespace {

void require_aperiodic(const Morphism& sigma) {
  const Word root = primitive_root(sigma.image(0));
  for (const Word& img : sigma.images()) {
    if (img.size() % root.size() != 0) return;
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i] != root[i % root.size()]) return;
  }
  throw PeriodicMorphismError(sigma.codomain(), root);
}

std::size_t fine_wilf_cap(const Morphism& sigma) {
  std::size_t a = 0, b = 0;
  for (const Word& img : sigma.images()) {
    if (img.size() >= a) {
      b = a;
      a = img.size();
    } else if (img.size() > b) {
      b = img.size();
    }
  }
  return a + b;
}

// Letter i (0-based) of σ(a)^ω, or of ^ωσ(a) read from the right.
Letter periodic_letter(const Word& img, std::size_t i, bool from_right) {
  const std::size_t r = i % img.size();
  return from_right ? img[img.size() - 1 - r] : img[r];
}

Word limit_word(const Morphism& sigma, bool from_right) {
  require_aperiodic(sigma);
  const std::size_t cap = fine_wilf_cap(sigma);
  Word out;
  for (std::size_t i = 0;; ++i) {
    if (i > cap)
      throw std::logic_error("limit word exceeded the Fine-Wilf bound");
    const Letter c = periodic_letter(sigma.image(0), i, from_right);
    for (const Word& img : sigma.images())
      if (periodic_letter(img, i, from_right) != c) {
        if (from_right) std::reverse(out.begin(), out.end());
        return out;
      }
    out.push_back(c);
  }
}

}  // namespace

Word limit_prefix(const Morphism& sigma) { return limit_word(sigma, false); }
Word limit_suffix(const Morphism& sigma) { return limit_word(sigma, true); }

std::vector<Letter> AntecedentReport::ambiguous() const {
  std::vector<Letter> out;
  for (std::size_t b = 0; b < prefix_antecedents.size(); ++b)
    if (prefix_antecedents[b].size() > 1 || suffix_antecedents[b].size() > 1)
      out.push_back(static_cast<Letter>(b));
  return out;
}

AntecedentReport check_antecedent_uniqueness(const Morphism& sigma) {
  AntecedentReport report;
  report.prefix = limit_prefix(sigma);
  report.suffix = limit_suffix(sigma);
  const std::size_t nb = sigma.codomain().size();
  report.prefix_antecedents.resize(nb);
  report.suffix_antecedents.resize(nb);
  for (std::size_t a = 0; a < sigma.domain().size(); ++a) {
    const auto x = static_cast<Letter>(a);
    const Word right = concat(sigma.image(x), report.prefix);
    const Word left = concat(report.suffix, sigma.image(x));
    for (std::size_t b = 0; b < nb; ++b) {
      const auto y = static_cast<Letter>(b);
      if (is_prefix(concat(report.prefix, Word{y}), right))
        report.prefix_antecedents[b].push_back(x);
      if (is_suffix(concat(Word{y}, report.suffix), left))
        report.suffix_antecedents[b].push_back(x);
    }
  }
  return report;
}

}  // namespace dendric
