#include "dendric/iet.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace dendric {

namespace {

std::vector<std::size_t> ranks(const std::vector<Letter>& order) {
  std::vector<std::size_t> r(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) r[order[i]] = i;
  return r;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(std::string(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> order_letters(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& part : split(text, '<')) out.push_back(trim(part));
  return out;
}

}  // namespace

std::vector<std::size_t> OrderPair::leq_rank() const { return ranks(leq); }
std::vector<std::size_t> OrderPair::preceq_rank() const { return ranks(preceq); }

void OrderPair::validate(std::size_t k) const {
  auto check = [k](const std::vector<Letter>& order) {
    if (order.size() != k)
      throw PreconditionError("an order must list every letter once");
    std::vector<bool> seen(k, false);
    for (Letter a : order) {
      if (a >= k || seen[a])
        throw PreconditionError("an order must list every letter once");
      seen[a] = true;
    }
  };
  check(leq);
  check(preceq);
}

bool OrderPair::irreducible() const {
  std::uint64_t a = 0, b = 0;
  for (std::size_t i = 0; i + 1 < leq.size(); ++i) {
    a |= std::uint64_t{1} << leq[i];
    b |= std::uint64_t{1} << preceq[i];
    if (a == b) return false;
  }
  return true;
}

OrderPair OrderPair::reversed() const {
  OrderPair r{{leq.rbegin(), leq.rend()}, {preceq.rbegin(), preceq.rend()}};
  return r;
}

std::string format_orders(const Alphabet& alphabet, const OrderPair& orders) {
  auto one = [&](const std::vector<Letter>& order) {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) out += "<";
      out += alphabet.name(order[i]);
    }
    return out;
  };
  return one(orders.leq) + " | " + one(orders.preceq);
}

Alphabet alphabet_of_orders(std::string_view text) {
  const auto parts = split(text, '|');
  if (parts.size() != 2) throw ParseError("expected two orders", 1, 1);
  auto names = order_letters(parts[0]);
  std::sort(names.begin(), names.end());
  return Alphabet(names);
}

OrderPair parse_orders(const Alphabet& alphabet, std::string_view text) {
  const auto parts = split(text, '|');
  if (parts.size() != 2)
    throw ParseError("expected two orders separated by '|'", 1, 1);
  OrderPair orders;
  std::size_t column = 1;
  for (int side = 0; side < 2; ++side) {
    auto& order = side == 0 ? orders.leq : orders.preceq;
    for (const auto& name : order_letters(parts[side])) {
      auto a = alphabet.find(name);
      if (!a) throw ParseError("unknown letter '" + name + "'", 1, column);
      order.push_back(*a);
    }
    column += parts[side].size() + 1;
  }
  try {
    orders.validate(alphabet.size());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return orders;
}

IntervalExchange::IntervalExchange(Alphabet alphabet, OrderPair orders,
                                   std::vector<ExactReal> lengths)
    : alphabet_(std::move(alphabet)),
      orders_(std::move(orders)),
      lengths_(std::move(lengths)) {
  const std::size_t k = alphabet_.size();
  orders_.validate(k);
  if (lengths_.size() != k)
    throw PreconditionError("one length per letter required");
  ExactReal total;
  for (const auto& l : lengths_) {
    if (l.sign() <= 0)
      throw PreconditionError("interval lengths must be positive");
    total += l;
  }
  if (total != ExactReal(1))
    throw PreconditionError("interval lengths must sum to 1, got " +
                            total.to_string());
  i_start_.resize(k);
  j_start_.resize(k);
  ExactReal acc;
  for (Letter a : orders_.leq) {
    i_start_[a] = acc;
    acc += lengths_[a];
  }
  acc = ExactReal();
  for (Letter a : orders_.preceq) {
    j_start_[a] = acc;
    acc += lengths_[a];
  }
}

Letter IntervalExchange::letter_at(const ExactReal& z) const {
  if (z.sign() < 0 || z >= ExactReal(1))
    throw PreconditionError("point " + z.to_string() + " outside [0,1)");
  for (auto it = orders_.leq.rbegin(); it != orders_.leq.rend(); ++it)
    if (i_start_[*it] <= z) return *it;
  return orders_.leq.front();
}

ExactReal IntervalExchange::apply(const ExactReal& z) const {
  const Letter a = letter_at(z);
  return z - i_start_[a] + j_start_[a];
}

IntervalExchange IntervalExchange::inverse() const {
  return IntervalExchange(alphabet_, OrderPair{orders_.preceq, orders_.leq},
                          lengths_);
}

std::string IntervalExchange::to_string() const {
  std::string out = "orders: " + format_orders(alphabet_, orders_) + " ; lengths: ";
  for (std::size_t a = 0; a < lengths_.size(); ++a) {
    if (a) out += ", ";
    out += alphabet_.name(static_cast<Letter>(a)) + "=" + lengths_[a].to_string();
  }
  return out;
}

IetText parse_iet(std::string_view text) {
  std::optional<std::string> orders_text, lengths_text, point_text;
  std::size_t column = 1;
  for (const auto& section : split(text, ';')) {
    const auto colon = section.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value'", 1, column);
    const std::string key = trim(std::string_view(section).substr(0, colon));
    std::string value = trim(std::string_view(section).substr(colon + 1));
    if (key == "orders")
      orders_text = value;
    else if (key == "lengths")
      lengths_text = value;
    else if (key == "point")
      point_text = value;
    else
      throw ParseError("unknown section '" + key + "'", 1, column);
    column += section.size() + 1;
  }
  if (!orders_text) throw ParseError("missing 'orders:' section", 1, 1);
  if (!lengths_text) throw ParseError("missing 'lengths:' section", 1, 1);

  const Alphabet alphabet = alphabet_of_orders(*orders_text);
  OrderPair orders = parse_orders(alphabet, *orders_text);
  std::vector<std::optional<ExactReal>> lengths(alphabet.size());
  for (const auto& item : split(*lengths_text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'letter=length'", 1, 1);
    const std::string name = trim(std::string_view(item).substr(0, eq));
    auto a = alphabet.find(name);
    if (!a) throw ParseError("unknown letter '" + name + "'", 1, 1);
    if (lengths[*a]) throw ParseError("length of '" + name + "' given twice", 1, 1);
    lengths[*a] = ExactReal::parse(std::string_view(item).substr(eq + 1));
  }
  std::vector<ExactReal> values;
  for (std::size_t a = 0; a < lengths.size(); ++a) {
    if (!lengths[a])
      throw ParseError("missing length for '" +
                           alphabet.name(static_cast<Letter>(a)) + "'",
                       1, 1);
    values.push_back(*lengths[a]);
  }
  ExactReal point = point_text ? ExactReal::parse(*point_text) : ExactReal();
  try {
    return IetText{IntervalExchange(alphabet, std::move(orders), std::move(values)),
                   std::move(point)};
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

const char* to_string(KeaneVerdict verdict) {
  switch (verdict) {
    case KeaneVerdict::regular_certified:
      return "RegularCertified";
    case KeaneVerdict::rationally_dependent:
      return "RationallyDependent";
    case KeaneVerdict::orbit_collision:
      return "OrbitCollision";
  }
  return "?";
}

KeaneReport keane_check(const IntervalExchange& t, std::size_t depth) {
  KeaneReport report;
  if (t.orders().irreducible() && rational_rank(t.lengths()) == t.lengths().size()) {
    report.verdict = KeaneVerdict::regular_certified;
    return report;
  }
  std::vector<ExactReal> cuts;
  for (std::size_t a = 0; a < t.alphabet().size(); ++a)
    if (!t.i_start(static_cast<Letter>(a)).is_zero())
      cuts.push_back(t.i_start(static_cast<Letter>(a)));
  std::sort(cuts.begin(), cuts.end());
  for (const ExactReal& start : cuts) {
    ExactReal z = start;
    for (std::size_t n = 1; n <= depth; ++n) {
      z = t.apply(z);
      if (std::binary_search(cuts.begin(), cuts.end(), z)) {
        report.verdict = KeaneVerdict::orbit_collision;
        report.steps = n;
        report.from = start;
        report.to = z;
        return report;
      }
    }
  }
  return report;
}

LanguageWindow natural_coding(const IntervalExchange& t, const ExactReal& z,
                              std::size_t max_len, bool allow_irregular) {
  if (max_len < 2) throw PreconditionError("window depth must be at least 2");
  const bool regular = keane_check(t).verdict == KeaneVerdict::regular_certified;
  if (!allow_irregular && !regular)
    throw PreconditionError("exchange is not certified regular");
  // A regular exchange on k letters has exactly (k - 1) n + 1 factors of
  // length n, so a sample reaching that count is complete.
  const std::size_t complete = (t.alphabet().size() - 1) * max_len + 1;
  t.letter_at(z);
  const IntervalExchange back = t.inverse();
  constexpr std::size_t kMaxHorizon = std::size_t{1} << 18;
  const std::string tag = "iet:" + t.to_string() + " ; point: " + z.to_string();

  std::deque<Letter> coding{t.letter_at(z)};
  ExactReal forward = z, backward = z;
  std::size_t horizon = 0;
  auto extend = [&](std::size_t h) {
    for (; horizon < h; ++horizon) {
      forward = t.apply(forward);
      coding.push_back(t.letter_at(forward));
      backward = back.apply(backward);
      coding.push_front(t.letter_at(backward));
    }
  };
  auto window_at = [&](std::size_t h) -> std::optional<LanguageWindow> {
    extend(h);
    const Word sample(coding.begin(), coding.end());
    try {
      return LanguageWindow::from_sample(t.alphabet(), sample, max_len, tag);
    } catch (const WindowError&) {
      return std::nullopt;
    }
  };

  std::size_t h = 4 * max_len * t.alphabet().size();
  auto current = window_at(h);
  while (2 * h <= kMaxHorizon) {
    auto next = window_at(2 * h);
    if (current && next && current->same_language(*next) &&
        (!regular || next->count(max_len) == complete))
      return *next;
    current = std::move(next);
    h *= 2;
  }
  throw PreconditionError("coding did not saturate within horizon " +
                          std::to_string(kMaxHorizon));
}

namespace {

std::optional<FzViolation> fz_violation(const ExtensionGraph& g,
                                        const std::vector<std::size_t>& leq,
                                        const std::vector<std::size_t>& preceq,
                                        const Alphabet& alphabet) {
  // Item 1: sorted by (≼ of left, ≤ of right), right ranks never decrease.
  std::vector<Edge> edges = g.edges;
  std::sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
    return std::pair(preceq[x.first], leq[x.second]) <
           std::pair(preceq[y.first], leq[y.second]);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (leq[edges[i].second] < leq[edges[i - 1].second]) {
      const Edge& a = edges[i - 1];
      const Edge& b = edges[i];
      return FzViolation{g.word, 1,
                         "edges (" + alphabet.name(a.first) + "," +
                             alphabet.name(a.second) + ") and (" +
                             alphabet.name(b.first) + "," +
                             alphabet.name(b.second) + ") cross"};
    }
  }
  // Item 2: consecutive left extensions share exactly one right neighbour.
  std::vector<Letter> left = g.left;
  std::sort(left.begin(), left.end(),
            [&](Letter x, Letter y) { return preceq[x] < preceq[y]; });
  for (std::size_t i = 1; i < left.size(); ++i) {
    std::size_t shared = 0;
    for (Letter b : g.right) {
      const bool x = std::binary_search(g.edges.begin(), g.edges.end(),
                                        Edge{left[i - 1], b});
      const bool y =
          std::binary_search(g.edges.begin(), g.edges.end(), Edge{left[i], b});
      shared += x && y;
    }
    if (shared != 1)
      return FzViolation{g.word, 2,
                         "left extensions " + alphabet.name(left[i - 1]) +
                             " and " + alphabet.name(left[i]) + " share " +
                             std::to_string(shared) + " right extensions"};
  }
  return std::nullopt;
}

}  // namespace

FzReport check_fz_conditions(const LanguageWindow& win, const OrderPair& orders,
                             std::size_t min_length) {
  orders.validate(win.alphabet().size());
  const auto leq = orders.leq_rank();
  const auto preceq = orders.preceq_rank();
  FzReport report;
  for (std::size_t n = min_length; n <= win.scan_depth(); ++n) {
    for (const auto& g : level_graphs(win, n)) {
      if (auto v = fz_violation(g, leq, preceq, win.alphabet())) {
        report.violation = std::move(v);
        return report;
      }
    }
  }
  return report;
}

std::vector<OrderPair> find_planar_orders(const LanguageWindow& win,
                                          std::size_t min_length) {
  const std::size_t k = win.alphabet().size();
  if (k > 6)
    throw PreconditionError("order search is limited to 6 letters");
  std::vector<ExtensionGraph> graphs;
  for (std::size_t n = min_length; n <= win.scan_depth(); ++n)
    for (auto& g : level_graphs(win, n))
      if (g.left.size() > 1 || g.right.size() > 1) graphs.push_back(std::move(g));

  std::vector<Letter> first(k);
  std::iota(first.begin(), first.end(), Letter{0});
  std::vector<OrderPair> out;
  std::vector<Letter> leq = first;
  do {
    std::vector<Letter> preceq = first;
    const auto leq_rank = ranks(leq);
    do {
      const auto preceq_rank = ranks(preceq);
      bool ok = true;
      for (const auto& g : graphs)
        if (fz_violation(g, leq_rank, preceq_rank, win.alphabet())) {
          ok = false;
          break;
        }
      if (ok) out.push_back(OrderPair{leq, preceq});
    } while (std::next_permutation(preceq.begin(), preceq.end()));
  } while (std::next_permutation(leq.begin(), leq.end()));
  return out;
}

std::vector<Edge> parse_edges(const Alphabet& alphabet, std::string_view text) {
  std::vector<Edge> edges;
  std::size_t column = 1;
  for (const auto& item : split(text, ',')) {
    const std::string pair = trim(item);
    if (pair.size() != 2)
      throw ParseError("an edge is two letters, got '" + pair + "'", 1, column);
    auto a = alphabet.find(pair.substr(0, 1));
    auto b = alphabet.find(pair.substr(1, 1));
    if (!a || !b) throw ParseError("unknown letter in '" + pair + "'", 1, column);
    edges.emplace_back(*a, *b);
    column += item.size() + 1;
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::vector<Edge>> planar_trees(const OrderPair& orders) {
  const std::size_t k = orders.leq.size();
  std::vector<std::vector<Edge>> out;
  if (k == 0) return out;
  // Each path is a choice of which of the 2k-2 steps advance the left side.
  const std::size_t steps = 2 * k - 2;
  std::vector<bool> advance_left(steps, false);
  std::fill(advance_left.begin(), advance_left.begin() + (k - 1), true);
  do {
    std::vector<Edge> edges;
    std::size_t i = 0, j = 0;
    edges.emplace_back(orders.preceq[i], orders.leq[j]);
    for (bool left : advance_left) {
      (left ? i : j) += 1;
      edges.emplace_back(orders.preceq[i], orders.leq[j]);
    }
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));
  } while (std::prev_permutation(advance_left.begin(), advance_left.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderPair> irreducible_order_pairs(std::size_t k) {
  std::vector<Letter> first(k);
  std::iota(first.begin(), first.end(), Letter{0});
  std::vector<OrderPair> out;
  std::vector<Letter> leq = first;
  do {
    std::vector<Letter> preceq = first;
    do {
      OrderPair p{leq, preceq};
      if (p.irreducible()) out.push_back(std::move(p));
    } while (std::next_permutation(preceq.begin(), preceq.end()));
  } while (std::next_permutation(leq.begin(), leq.end()));
  return out;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Basis of the null space of m (rows x cols), by reduced row echelon form.
std::vector<std::vector<Rational>> null_space(Matrix m, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end())
      continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool connected(std::size_t k, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(2 * k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = 2 * k;
  for (const auto& [a, b] : edges) {
    const std::size_t x = find(a), y = find(k + b);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

IntervalExchange realize_graph_as_iet(const Alphabet& alphabet,
                                      const std::vector<Edge>& graph,
                                      const OrderPair& orders) {
  using Kind = RealizationError::Kind;
  const std::size_t k = alphabet.size();
  orders.validate(k);
  std::vector<Edge> edges = graph;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [a, b] : edges)
    if (a >= k || b >= k) throw PreconditionError("edge letter outside the alphabet");
  if (!connected(k, edges))
    throw RealizationError(Kind::not_connected, "graph is not connected");
  ExtensionGraph shape{{}, {}, {}, edges};
  for (const auto& [a, b] : edges) {
    shape.left.push_back(a);
    shape.right.push_back(b);
  }
  std::sort(shape.left.begin(), shape.left.end());
  shape.left.erase(std::unique(shape.left.begin(), shape.left.end()), shape.left.end());
  std::sort(shape.right.begin(), shape.right.end());
  shape.right.erase(std::unique(shape.right.begin(), shape.right.end()),
                    shape.right.end());
  if (fz_violation(shape, orders.leq_rank(), orders.preceq_rank(), alphabet))
    throw RealizationError(Kind::not_planar, "graph is not planar for the orders");
  if (!orders.irreducible())
    throw RealizationError(Kind::reducible_orders,
                           "orders share a proper initial segment");

  const std::size_t m = edges.size();
  // A positive circulation on the arcs a -> b: every arc on a directed cycle.
  std::vector<Rational> base(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [from, to] = edges[e];
    // Shortest path to -> from, recorded as predecessor arcs.
    std::vector<std::optional<std::size_t>> via(k);
    std::vector<bool> seen(k, false);
    std::queue<Letter> queue;
    queue.push(to);
    seen[to] = true;
    while (!queue.empty() && !seen[from]) {
      const Letter x = queue.front();
      queue.pop();
      for (std::size_t f = 0; f < m; ++f) {
        if (edges[f].first != x || seen[edges[f].second]) continue;
        seen[edges[f].second] = true;
        via[edges[f].second] = f;
        queue.push(edges[f].second);
      }
    }
    if (!seen[from])
      throw RealizationError(Kind::not_realizable,
                             "no positive lengths: edge (" + alphabet.name(from) +
                                 "," + alphabet.name(to) +
                                 ") lies on no cycle of the letter graph");
    base[e] += 1;
    for (Letter x = from; x != to; x = edges[*via[x]].first) base[*via[x]] += 1;
  }

  // Zero-total circulations: conservation at every letter plus total zero.
  Matrix constraints(k + 1, std::vector<Rational>(m, 0));
  for (std::size_t e = 0; e < m; ++e) {
    constraints[edges[e].first][e] += 1;
    constraints[edges[e].second][e] -= 1;
    constraints[k][e] = 1;
  }
  const auto directions = null_space(constraints, m);
  if (directions.size() > surd_basis_size())
    throw RealizationError(Kind::basis_exhausted,
                           "need " + std::to_string(directions.size()) +
                               " surds, basis has " +
                               std::to_string(surd_basis_size()));

  Rational total = 0;
  for (const auto& b : base) total += b;
  Rational eps(1, 4);
  for (;;) {
    std::vector<ExactReal> mu;
    for (std::size_t e = 0; e < m; ++e) {
      ExactReal v(base[e] / total);
      for (std::size_t j = 0; j < directions.size(); ++j)
        if (directions[j][e] != 0)
          v += ExactReal::surd(j, eps * directions[j][e] / total);
      mu.push_back(std::move(v));
    }
    if (std::all_of(mu.begin(), mu.end(), [](const ExactReal& v) { return v.sign() > 0; })) {
      std::vector<ExactReal> lengths(k);
      for (std::size_t e = 0; e < m; ++e) lengths[edges[e].first] += mu[e];
      return IntervalExchange(alphabet, orders, std::move(lengths));
    }
    eps /= 2;
  }
}

ArImageReport check_ar_image_of_riet(Letter ell, Side side,
                                     const IntervalExchange& t,
                                     std::size_t depth) {
  const auto& leq = t.orders().leq;
  if (ell >= leq.size() || ell == leq.front() || ell == leq.back())
    throw PreconditionError("letter must be neither the least nor the greatest for <=");
  if (depth < 2) throw PreconditionError("depth must be at least 2");
  const Alphabet& alphabet = t.alphabet();
  const LanguageWindow coding = natural_coding(t, ExactReal(), depth + 2);
  const LanguageWindow image =
      apply_to_window(arnoux_rauzy(side, ell, alphabet), coding, depth);

  ArImageReport report;
  report.empty_graph = extension_graph(image, {});
  std::vector<Edge> star;
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    star.emplace_back(ell, static_cast<Letter>(a));
    if (a != ell) star.emplace_back(static_cast<Letter>(a), ell);
  }
  std::sort(star.begin(), star.end());
  report.star = report.empty_graph.edges == star;
  report.planar = find_planar_orders(image);
  report.nonempty = check_fz_conditions(image, t.orders(), 1);
  return report;
}

}  // namespace dendric
