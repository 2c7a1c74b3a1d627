#include "dendric/source.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dendric/iet.hpp"
#include "dendric/morphism.hpp"

namespace dendric {

LanguageWindow truncate(const LanguageWindow& win, std::size_t max_len) {
  if (max_len > win.max_len())
    throw PreconditionError("window depth " + std::to_string(win.max_len()) +
                            " < " + std::to_string(max_len));
  if (max_len == win.max_len()) return win;
  auto top = win.level(max_len);
  return LanguageWindow::from_top_level(win.alphabet(), {top.begin(), top.end()},
                                        max_len, win.source());
}

LanguageWindow window_from_source(std::string_view descriptor,
                                  std::optional<std::size_t> max_len) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("source must look like kind:value", 1, 1);
  const std::string_view kind = descriptor.substr(0, colon);
  const std::string_view value = descriptor.substr(colon + 1);
  const std::size_t offset = colon + 2;

  if (kind == "file") {
    std::ifstream in{std::string(value)};
    if (!in) throw PreconditionError("cannot read " + std::string(value));
    std::stringstream text;
    text << in.rdbuf();
    LanguageWindow win = parse_window(text.str());
    return max_len ? truncate(win, *max_len) : win;
  }
  if (!max_len) throw PreconditionError("a depth is required for this source");

  if (kind == "periodic") {
    const auto dot = value.find('.');
    const std::string_view u = value.substr(0, dot);
    const std::string_view v = dot == std::string_view::npos ? u : value.substr(dot + 1);
    if (u.empty() || v.empty())
      throw ParseError("periodic words must be nonempty", 1, offset);
    std::string letters = std::string(u) + std::string(v);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    const Alphabet alphabet = Alphabet::from_chars(letters);
    return window_from_two_sided_periodic(alphabet, alphabet.parse(u),
                                          alphabet.parse(v), *max_len);
  }
  if (kind == "substitutive") {
    const auto at = value.rfind('@');
    if (at == std::string_view::npos)
      throw ParseError("expected <rules>@<seed>", 1, offset + value.size());
    const Morphism sigma = Morphism::parse(value.substr(0, at));
    const auto seed = sigma.domain().find(value.substr(at + 1));
    if (!seed)
      throw ParseError("unknown seed letter", 1, offset + at + 1);
    return window_from_substitutive(sigma, *seed, *max_len);
  }
  if (kind == "iet") {
    const IetText t = parse_iet(value);
    return natural_coding(t.iet, t.point, *max_len);
  }
  throw ParseError("unknown source kind '" + std::string(kind) + "'", 1, 1);
}

}  // namespace dendric
