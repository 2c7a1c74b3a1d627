// Naive reference implementations used to cross-check the library. They work
// on plain strings and floating point, sharing no code with the library.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "dendric/exact_real.hpp"
#include "dendric/language_window.hpp"

namespace oracle {

using Real = boost::multiprecision::cpp_dec_float_100;

inline std::set<std::string> factors(const std::string& s, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= s.size(); ++i) out.insert(s.substr(i, n));
  return out;
}

inline std::string iterate(const std::vector<std::pair<char, std::string>>& rules,
                           std::string w, int times) {
  for (int t = 0; t < times; ++t) {
    std::string next;
    for (char c : w)
      for (const auto& [a, img] : rules)
        if (a == c) next += img;
    w = next;
  }
  return w;
}

inline std::string repeat(const std::string& s, std::size_t times) {
  std::string out;
  for (std::size_t i = 0; i < times; ++i) out += s;
  return out;
}

/// Level n of a window as strings.
inline std::set<std::string> level(const dendric::LanguageWindow& win,
                                   std::size_t n) {
  std::set<std::string> out;
  for (const auto& w : win.level(n)) out.insert(win.alphabet().format(w));
  return out;
}

/// Bi-extensions (a, b) of w read off the factors of length |w| + 2.
inline std::set<std::pair<char, char>> extensions(const std::set<std::string>& next2,
                                                  const std::string& w) {
  std::set<std::pair<char, char>> out;
  for (const auto& x : next2)
    if (x.substr(1, w.size()) == w) out.insert({x.front(), x.back()});
  return out;
}

struct Cover {
  std::string w;
  std::size_t k;
  std::string u;
  auto operator<=>(const Cover&) const = default;
};

/// Coverings of length n by brute force over the factors of a sample.
inline std::set<Cover> coverings(const std::string& sample,
                                 const std::vector<std::pair<char, std::string>>& rules,
                                 std::size_t n) {
  auto image = [&](const std::string& w) { return iterate(rules, w, 1); };
  std::set<Cover> out;
  for (std::size_t m = 1; m <= n; ++m) {
    for (const auto& w : factors(sample, m)) {
      const std::string img = image(w);
      const std::size_t first = image(w.substr(0, 1)).size();
      const std::size_t head = image(w.substr(0, m - 1)).size();
      for (std::size_t k = 0; k + n <= img.size(); ++k)
        if (k + 1 <= first && k + n > head) out.insert({w, k, img.substr(k, n)});
    }
  }
  return out;
}

inline Real sqrt_prime(unsigned p) { return boost::multiprecision::sqrt(Real(p)); }

/// 100-digit decimal value of an exact real.
inline Real value(const dendric::ExactReal& x) {
  Real v = 0;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    const auto c = x.coord(i);
    Real q = Real(numerator(c).str()) / Real(denominator(c).str());
    v += i == 0 ? q : q * sqrt_prime(dendric::surd_prime(i - 1));
  }
  return v;
}

}  // namespace oracle
