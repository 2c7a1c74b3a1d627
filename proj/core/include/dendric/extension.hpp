#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dendric/language_window.hpp"

namespace dendric {

using Edge = std::pair<Letter, Letter>;

/// Bipartite graph of the left extensions, right extensions and
/// bi-extensions (a, b) with a·w·b a factor. All vectors are sorted.
struct ExtensionGraph {
  Word word;
  std::vector<Letter> left;
  std::vector<Letter> right;
  std::vector<Edge> edges;

  bool operator==(const ExtensionGraph&) const = default;
};

enum class Sign { weak, neutral, strong };

struct FactorClass {
  int multiplicity = 0;
  Sign sign = Sign::neutral;
  bool acyclic = false;
  bool connected = false;
  bool dendric = false;
  bool left_special = false;
  bool right_special = false;
  bool bispecial = false;
};

/// Extension graph from membership queries. Requires w in the window and
/// |w| <= scan_depth(); throws PreconditionError otherwise.
ExtensionGraph extension_graph(const LanguageWindow& win, const Word& w);

/// Extension graphs of every factor of length n (n <= scan_depth()), in the
/// order of win.level(n). Built in one pass over level n + 2.
std::vector<ExtensionGraph> level_graphs(const LanguageWindow& win,
                                         std::size_t n);

/// Multiplicity, sign and shape of one graph. Edge endpoints must lie in the
/// vertex sets.
FactorClass classify(const ExtensionGraph& graph);

FactorClass classify_factor(const LanguageWindow& win, const Word& w);

const char* to_string(Sign sign);

/// Minimal n such that every scanned factor of length in [n, depth]
/// satisfies a property. `certified` is false when the longest scanned
/// factors still violate it; `value` is then depth + 1.
struct Threshold {
  std::size_t value = 0;
  bool certified = true;
};

Threshold property_threshold(const LanguageWindow& win,
                             const std::function<bool(const FactorClass&)>& property);

struct ThresholdReport {
  Threshold dendric;          // N
  Threshold acyclic;          // M
  Threshold neutral;          // M'
  Threshold weak_or_neutral;  // K
  std::size_t scan_depth = 0;

  bool ordered() const {
    return weak_or_neutral.value <= acyclic.value &&
           acyclic.value <= dendric.value &&
           weak_or_neutral.value <= neutral.value &&
           neutral.value <= dendric.value;
  }
};

/// Thresholds of the four eventual properties, valid up to the scan depth.
/// Requires max_len >= 4.
ThresholdReport thresholds(const LanguageWindow& win);

/// True when every factor up to the scan depth is dendric.
bool is_dendric_certified(const LanguageWindow& win);

}  // namespace dendric
