#include "dendric/extension.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "dendric/error.hpp"

namespace dendric {

namespace {

void require_scannable(const LanguageWindow& win, const Word& w) {
  if (w.size() > win.scan_depth())
    throw PreconditionError("factor of length " + std::to_string(w.size()) +
                            " exceeds scan depth " +
                            std::to_string(win.scan_depth()));
  if (!win.contains(w))
    throw PreconditionError("'" + display(win.alphabet(), w) +
                            "' is not a factor of the window");
}

void fill_vertices(ExtensionGraph& g) {
  g.left.clear();
  g.right.clear();
  for (const auto& [a, b] : g.edges) {
    g.left.push_back(a);
    g.right.push_back(b);
  }
  std::sort(g.left.begin(), g.left.end());
  g.left.erase(std::unique(g.left.begin(), g.left.end()), g.left.end());
  std::sort(g.right.begin(), g.right.end());
  g.right.erase(std::unique(g.right.begin(), g.right.end()), g.right.end());
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

ExtensionGraph extension_graph(const LanguageWindow& win, const Word& w) {
  require_scannable(win, w);
  const std::size_t k = win.alphabet().size();
  ExtensionGraph g;
  g.word = w;
  Word probe;
  for (std::size_t a = 0; a < k; ++a) {
    probe = concat(Word{static_cast<Letter>(a)}, w);
    if (win.contains(probe)) g.left.push_back(static_cast<Letter>(a));
    probe = concat(w, Word{static_cast<Letter>(a)});
    if (win.contains(probe)) g.right.push_back(static_cast<Letter>(a));
  }
  for (Letter a : g.left) {
    for (Letter b : g.right) {
      probe.clear();
      probe.push_back(a);
      probe.insert(probe.end(), w.begin(), w.end());
      probe.push_back(b);
      if (win.contains(probe)) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

std::vector<ExtensionGraph> level_graphs(const LanguageWindow& win,
                                         std::size_t n) {
  if (n > win.scan_depth())
    throw PreconditionError("level " + std::to_string(n) +
                            " exceeds scan depth " +
                            std::to_string(win.scan_depth()));
  auto words = win.level(n);
  std::vector<ExtensionGraph> graphs(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) graphs[i].word = words[i];
  Word middle;
  for (const Word& z : win.level(n + 2)) {
    middle.assign(z.begin() + 1, z.end() - 1);
    const std::size_t i = win.index_of(middle);
    graphs[i].edges.emplace_back(z.front(), z.back());
  }
  for (auto& g : graphs) fill_vertices(g);
  return graphs;
}

FactorClass classify(const ExtensionGraph& graph) {
  FactorClass c;
  const std::size_t nl = graph.left.size();
  const std::size_t nr = graph.right.size();
  c.multiplicity = static_cast<int>(graph.edges.size()) -
                   static_cast<int>(nl) - static_cast<int>(nr) + 1;
  c.sign = c.multiplicity < 0   ? Sign::weak
           : c.multiplicity > 0 ? Sign::strong
                                : Sign::neutral;

  auto position = [](const std::vector<Letter>& side, Letter a) {
    return static_cast<std::size_t>(
        std::lower_bound(side.begin(), side.end(), a) - side.begin());
  };
  DisjointSets sets(nl + nr);
  std::size_t components = nl + nr;
  for (const auto& [a, b] : graph.edges)
    if (sets.unite(position(graph.left, a), nl + position(graph.right, b)))
      --components;

  c.acyclic = graph.edges.size() + components == nl + nr;
  c.connected = components == 1;
  c.dendric = c.acyclic && c.connected;
  c.left_special = nl >= 2;
  c.right_special = nr >= 2;
  c.bispecial = c.left_special && c.right_special;
  return c;
}

FactorClass classify_factor(const LanguageWindow& win, const Word& w) {
  return classify(extension_graph(win, w));
}

const char* to_string(Sign sign) {
  switch (sign) {
    case Sign::weak:
      return "weak";
    case Sign::neutral:
      return "neutral";
    case Sign::strong:
      return "strong";
  }
  return "?";
}

namespace {

// holds[p][n]: every factor of length n satisfies property p.
template <std::size_t P>
std::array<Threshold, P> scan_thresholds(
    const LanguageWindow& win,
    const std::array<std::function<bool(const FactorClass&)>, P>& properties) {
  const std::size_t depth = win.scan_depth();
  std::array<std::vector<bool>, P> holds;
  for (auto& h : holds) h.assign(depth + 1, true);
  for (std::size_t n = 0; n <= depth; ++n) {
    for (const auto& g : level_graphs(win, n)) {
      const FactorClass c = classify(g);
      for (std::size_t p = 0; p < P; ++p)
        if (holds[p][n] && !properties[p](c)) holds[p][n] = false;
    }
  }
  std::array<Threshold, P> out;
  for (std::size_t p = 0; p < P; ++p) {
    std::size_t t = depth + 1;
    while (t > 0 && holds[p][t - 1]) --t;
    out[p] = Threshold{t, t <= depth};
  }
  return out;
}

}  // namespace

Threshold property_threshold(
    const LanguageWindow& win,
    const std::function<bool(const FactorClass&)>& property) {
  return scan_thresholds<1>(win, {property})[0];
}

ThresholdReport thresholds(const LanguageWindow& win) {
  if (win.max_len() < 4)
    throw PreconditionError("thresholds need a window of depth at least 4");
  auto t = scan_thresholds<4>(
      win, {[](const FactorClass& c) { return c.dendric; },
            [](const FactorClass& c) { return c.acyclic; },
            [](const FactorClass& c) { return c.sign == Sign::neutral; },
            [](const FactorClass& c) { return c.sign != Sign::strong; }});
  ThresholdReport report;
  report.dendric = t[0];
  report.acyclic = t[1];
  report.neutral = t[2];
  report.weak_or_neutral = t[3];
  report.scan_depth = win.scan_depth();
  return report;
}

bool is_dendric_certified(const LanguageWindow& win) {
  for (std::size_t n = 0; n <= win.scan_depth(); ++n)
    for (const auto& g : level_graphs(win, n))
      if (!classify(g).dendric) return false;
  return true;
}

}  // namespace dendric
