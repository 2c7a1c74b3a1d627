#include "dendric/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "dendric/ar_decompose.hpp"
#include "dendric/complexity.hpp"
#include "dendric/coverings.hpp"
#include "dendric/extension.hpp"
#include "dendric/witness.hpp"

namespace dendric {

IntervalExchange sample_riet(std::size_t letters) {
  if (letters < 2 || letters > 6)
    throw PreconditionError("sample exchanges have 2 to 6 letters");
  std::string names = std::string("abcdef").substr(0, letters);
  const Alphabet alphabet = Alphabet::from_chars(names);
  OrderPair orders;
  for (std::size_t i = 0; i < letters; ++i) {
    orders.leq.push_back(static_cast<Letter>(i));
    orders.preceq.push_back(static_cast<Letter>(letters - 1 - i));
  }
  std::vector<Edge> tree;
  std::size_t i = 0, j = 0;
  tree.emplace_back(orders.preceq[0], orders.leq[0]);
  while (i + 1 < letters || j + 1 < letters) {
    if (i <= j && i + 1 < letters)
      ++i;
    else
      ++j;
    tree.emplace_back(orders.preceq[i], orders.leq[j]);
  }
  return realize_graph_as_iet(alphabet, tree, orders);
}

std::vector<NamedWindow> window_matrix(std::size_t max_len) {
  const Alphabet bits = Alphabet::from_chars("01");
  const Alphabet ab = Alphabet::from_chars("ab");
  const Morphism fib = Morphism::parse("a->ab;b->a");
  const Morphism trib = Morphism::parse("a->ab;b->ac;c->a");
  std::vector<NamedWindow> out;
  out.push_back({"periodic 001",
                 window_from_two_sided_periodic(bits, bits.parse("001"),
                                                bits.parse("001"), max_len)});
  out.push_back({"periodic 01.10",
                 window_from_two_sided_periodic(bits, bits.parse("01"),
                                                bits.parse("10"), max_len)});
  out.push_back({"constant",
                 window_from_two_sided_periodic(Alphabet::from_chars("a"),
                                                Word{0}, Word{0}, max_len)});
  out.push_back({"fibonacci", window_from_substitutive(fib, 0, max_len)});
  out.push_back({"tribonacci", window_from_substitutive(trib, 0, max_len)});
  out.push_back({"riet3", natural_coding(sample_riet(3), ExactReal(), max_len)});
  out.push_back({"riet4", natural_coding(sample_riet(4), ExactReal(), max_len)});
  out.push_back({"L_a(fibonacci)",
                 apply_to_window(arnoux_rauzy(Side::L, 0, ab),
                                 window_from_substitutive(fib, 0, max_len + 2),
                                 max_len)});
  out.push_back({"R_b(tribonacci)",
                 apply_to_window(arnoux_rauzy(Side::R, 1, trib.domain()),
                                 window_from_substitutive(trib, 0, max_len + 2),
                                 max_len)});
  out.push_back({"thue-morse image of fibonacci",
                 apply_to_window(Morphism::parse("a->ab;b->ba"),
                                 window_from_substitutive(fib, 0, max_len + 2),
                                 max_len)});
  out.push_back({"thue-morse", window_from_substitutive(
                                   Morphism::parse("a->ab;b->ba"), 0, max_len)});
  return out;
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::to_string() const {
  std::string out;
  for (const auto& c : checks)
    out += std::string(c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
  return out;
}

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string edges_text(const Alphabet& a, const std::vector<Edge>& edges) {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += "(" + a.name(edges[i].first) + "," + a.name(edges[i].second) + ")";
  }
  return out + "}";
}

Outcome repeated_factor_graphs(std::size_t depth) {
  const Alphabet bits = Alphabet::from_chars("01");
  const auto win = window_from_two_sided_periodic(bits, bits.parse("001"),
                                                  bits.parse("001"), depth + 2);
  const auto g0 = extension_graph(win, {});
  const auto g1 = extension_graph(win, bits.parse("0"));
  const auto c0 = classify(g0), c1 = classify(g1);
  const bool ok = g0.edges == std::vector<Edge>{{0, 0}, {0, 1}, {1, 0}} &&
                  g1.edges == std::vector<Edge>{{0, 1}, {1, 0}} && c0.dendric &&
                  c1.acyclic && !c1.dendric;
  return {ok, "E(ε)=" + edges_text(bits, g0.edges) +
                  " E(0)=" + edges_text(bits, g1.edges)};
}

Outcome covering_example() {
  const Morphism sigma = Morphism::parse("a->ab;b->abb");
  const Alphabet& ab = sigma.domain();
  const Word u = ab.parse("babb");
  const auto both = window_from_two_sided_periodic(ab, ab.parse("abb"),
                                                   ab.parse("abb"), 8);
  const auto sturmian =
      window_from_substitutive(Morphism::parse("a->ab;b->a"), 0, 8);
  const auto c1 = coverings_of(u, sigma, both);
  const auto c2 = coverings_of(u, sigma, sturmian);
  const std::vector<Covering> expect1{{ab.parse("ab"), 1, u}, {ab.parse("bb"), 2, u}};
  const std::vector<Covering> expect2{{ab.parse("ab"), 1, u}};
  return {c1 == expect1 && c2 == expect2,
          std::to_string(c1.size()) + " coverings with bb, " +
              std::to_string(c2.size()) + " in a Sturmian window"};
}

Outcome covering_formula(std::size_t n_max) {
  const Morphism fib = Morphism::parse("a->ab;b->a");
  const auto win = window_from_substitutive(fib, 0, n_max + 2);
  long recurrent = static_cast<long>(fib.total_length());
  for (std::size_t n = 1; n <= n_max; ++n) {
    const long direct = static_cast<long>(covering_count(fib, win, n));
    if (direct != static_cast<long>(n) + 2 || recurrent != direct)
      return {false, "n=" + std::to_string(n) + " direct " +
                         std::to_string(direct) + " recurrence " +
                         std::to_string(recurrent)};
    for (const Word& w : build_wn(fib, win, n))
      recurrent += static_cast<long>(right_degree(win, w)) - 1;
  }
  return {true, "c(n)=n+2 for 1<=n<=" + std::to_string(n_max)};
}

Outcome neutral_complexity(std::size_t depth) {
  const auto trib = window_from_substitutive(
      Morphism::parse("a->ab;b->ac;c->a"), 0, depth + 2);
  const auto fib = window_from_substitutive(Morphism::parse("a->ab;b->a"), 0,
                                            depth + 2);
  if (!is_dendric_certified(trib)) return {false, "tribonacci not dendric"};
  for (std::size_t n = 0; n <= depth + 2; ++n) {
    if (trib.count(n) != 2 * n + 1)
      return {false, "tribonacci p(" + std::to_string(n) + ")=" +
                         std::to_string(trib.count(n))};
    if (fib.count(n) != n + 1)
      return {false, "fibonacci p(" + std::to_string(n) + ")=" +
                         std::to_string(fib.count(n))};
  }
  return {true, "p(n)=2n+1 and n+1 up to " + std::to_string(depth + 2)};
}

Outcome cassaigne(std::size_t depth) {
  const auto matrix = window_matrix(depth + 2);
  for (const auto& [name, win] : matrix) {
    const auto r = check_cassaigne_identities(win);
    if (!r.holds())
      return {false, name + " fails the " + r.violation->identity +
                         " identity at n=" + std::to_string(r.violation->n)};
  }
  return {true, std::to_string(matrix.size()) + " windows"};
}

Outcome threshold_order(std::size_t depth) {
  const auto matrix = window_matrix(depth + 2);
  std::size_t certified = 0;
  for (const auto& [name, win] : matrix) {
    const auto t = thresholds(win);
    if (!t.ordered()) return {false, name + " has unordered thresholds"};
    if (name.find("thue-morse") != std::string::npos) continue;
    if (!t.dendric.certified) return {false, name + " has no certified N"};
    ++certified;
  }
  const auto t = thresholds(matrix[0].window);
  const bool expected = t.weak_or_neutral.value == 0 && t.acyclic.value == 0 &&
                     t.neutral.value == 2 && t.dendric.value == 2;
  return {expected && certified >= 5,
          std::to_string(certified) + " eventually dendric windows with a certified N, 001 gives (" +
              std::to_string(t.weak_or_neutral.value) + "," +
              std::to_string(t.acyclic.value) + "," +
              std::to_string(t.neutral.value) + "," +
              std::to_string(t.dendric.value) + ")"};
}

Outcome growth(std::size_t n_max) {
  const Morphism fib = Morphism::parse("a->ab;b->a");
  const Morphism trib = Morphism::parse("a->ab;b->ac;c->a");
  const auto fw = window_from_substitutive(fib, 0, n_max + 2);
  const auto tw = window_from_substitutive(trib, 0, n_max + 2);
  const std::vector<std::pair<const LanguageWindow*, Morphism>> pairs{
      {&fw, Morphism::parse("a->ab;b->ba")},
      {&fw, Morphism::parse("a->a;b->bb")},
      {&fw, Morphism::parse("a->aab;b->b")},
      {&tw, Morphism::parse("a->ab;b->ba;c->c")},
      {&tw, Morphism::parse("a->ab;b->c;c->ca")},
  };
  std::string detail = "C =";
  for (const auto& [win, sigma] : pairs) {
    const auto r = complexity_growth(sigma, *win, n_max);
    if (!r.covered) return {false, sigma.to_string() + " exceeds c(n)"};
    if (!r.settled || r.argmax > 40)
      return {false, sigma.to_string() + " not settled (max at n=" +
                         std::to_string(r.argmax) + ")"};
    detail += " " + std::to_string(r.max);
  }
  return {true, detail};
}

Outcome ar_round_trip(std::size_t trials, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> length(0, 12);
  for (std::size_t t = 0; t < trials; ++t) {
    const Alphabet alphabet = Alphabet::from_chars(t % 2 == 0 ? "abc" : "abcd");
    const Morphism sigma = random_ar_product(alphabet, length(rng), rng);
    const auto result = decompose(sigma);
    const auto* f = std::get_if<ARFactorization>(&result);
    if (!f) return {false, sigma.to_string() + " rejected"};
    if (!(f->recompose() == sigma))
      return {false, sigma.to_string() + " recomposes differently"};
  }
  for (const char* text : {"a->ab;b->ba", "0->01;1->10"}) {
    const auto result = decompose(Morphism::parse(text));
    if (!std::holds_alternative<RejectionCertificate>(result))
      return {false, std::string(text) + " accepted"};
  }
  return {true, std::to_string(trials) + " products recovered, 2 rejections"};
}

Outcome sturmian(std::size_t depth, std::size_t max_length) {
  const Alphabet bits = Alphabet::from_chars("01");
  std::vector<Morphism> generators;
  for (Side s : {Side::L, Side::R})
    for (Letter l : {Letter{0}, Letter{1}}) generators.push_back(arnoux_rauzy(s, l, bits));
  const IntervalExchange rotation(
      bits, OrderPair{{0, 1}, {1, 0}},
      {ExactReal::parse("2-r2"), ExactReal::parse("-1+r2")});
  const std::vector<LanguageWindow> windows{
      window_from_substitutive(Morphism::parse("0->01;1->0"), 0, depth + 2),
      window_from_substitutive(Morphism::parse("0->001;1->01"), 0, depth + 2),
      natural_coding(rotation, ExactReal(), depth + 2)};
  std::vector<Morphism> layer{Morphism::identity(bits)};
  std::size_t count = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Morphism> next;
    for (const auto& m : layer)
      for (const auto& g : generators) next.push_back(compose(m, g));
    for (const auto& m : next) {
      ++count;
      if (!is_sturmian_morphism(m)) return {false, m.to_string() + " rejected"};
      for (const auto& w : windows)
        if (!is_dendric_certified(apply_to_window(m, w, depth)))
          return {false, m.to_string() + " breaks dendricity"};
    }
    layer = std::move(next);
  }
  return {true, std::to_string(count) + " products accepted and sound"};
}

Outcome riet_pipeline(std::size_t graphs, std::mt19937_64& rng) {
  std::size_t done = 0, skipped = 0;
  while (done < graphs) {
    const std::size_t k = 3 + rng() % 2;
    const Alphabet alphabet = Alphabet::from_chars(std::string("abcd").substr(0, k));
    const auto pairs = irreducible_order_pairs(k);
    const OrderPair orders = pairs[rng() % pairs.size()];
    const auto trees = planar_trees(orders);
    const auto tree = trees[rng() % trees.size()];
    std::optional<IntervalExchange> t;
    try {
      t = realize_graph_as_iet(alphabet, tree, orders);
    } catch (const RealizationError& e) {
      if (e.kind() != RealizationError::Kind::not_realizable) throw;
      ++skipped;
      continue;
    }
    const auto win = natural_coding(*t, ExactReal(), 17);
    const std::string label = format_orders(alphabet, orders);
    if (extension_graph(win, {}).edges != tree)
      return {false, label + " E(ε) differs from the graph"};
    if (!check_fz_conditions(win, orders).holds())
      return {false, label + " coding fails the planarity conditions"};
    std::vector<OrderPair> expect{orders, orders.reversed()};
    std::sort(expect.begin(), expect.end());
    if (find_planar_orders(win) != expect)
      return {false, label + " has other planar orders"};
    ++done;
  }
  return {true, std::to_string(done) + " graphs, " + std::to_string(skipped) +
                    " unrealizable staircases skipped"};
}

Outcome riet_non_preservation(std::size_t depth) {
  const IntervalExchange t = sample_riet(3);
  for (Side side : {Side::L, Side::R}) {
    const auto r = check_ar_image_of_riet(1, side, t, depth);
    if (!r.holds())
      return {false, to_string(side) + "_b image: star=" + std::to_string(r.star) +
                         " planar=" + std::to_string(r.planar.size())};
  }
  return {true, "L_b and R_b images are not exchange codings"};
}

Outcome curated_witnesses(std::size_t depth) {
  for (const char* text : {"a->ab;b->ba", "0->01;1->10", "a->ab;b->ba;c->c",
                           "a->a;b->bb", "a->a;b->a;c->b"}) {
    const Morphism sigma = Morphism::parse(text);
    if (std::holds_alternative<ARFactorization>(decompose(sigma)))
      return {false, std::string(text) + " accepted"};
    if (!find_dendricity_counterexample(sigma, depth))
      return {false, std::string(text) + " has no witness"};
  }
  return {true, "5 rejections with non-dendric images"};
}

Outcome limit_words(std::size_t trials, std::mt19937_64& rng) {
  const Alphabet abc = Alphabet::from_chars("abc");
  std::uniform_int_distribution<std::size_t> len(1, 4);
  std::size_t checked = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Word> images(3);
    for (auto& img : images) {
      img.resize(len(rng));
      for (auto& c : img) c = static_cast<Letter>(rng() % 3);
    }
    std::optional<Morphism> sigma;
    try {
      sigma = Morphism::with_minimal_codomain(abc, abc, images);
    } catch (const PreconditionError&) {
      continue;
    }
    Word p;
    try {
      p = limit_prefix(*sigma);
    } catch (const PeriodicMorphismError&) {
      continue;
    }
    for (std::size_t a = 0; a < 3; ++a) {
      if (!is_prefix(p, concat(sigma->image(static_cast<Letter>(a)), p)))
        return {false, sigma->to_string() + " limit prefix is not common"};
    }
    bool maximal = true;
    for (std::size_t b = 0; b < sigma->codomain().size() && maximal; ++b) {
      const Word q = concat(p, Word{static_cast<Letter>(b)});
      bool common = true;
      for (std::size_t a = 0; a < 3; ++a)
        common = common && is_prefix(q, concat(sigma->image(static_cast<Letter>(a)), q));
      if (common) maximal = false;
    }
    if (!maximal) return {false, sigma->to_string() + " limit prefix not maximal"};
    ++checked;
  }
  return {true, std::to_string(checked) + " morphisms"};
}

}  // namespace

VerifyReport run_verify_suite(std::size_t depth, std::size_t trials,
                              std::uint64_t seed) {
  if (depth < 6) throw PreconditionError("verify needs depth >= 6");
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
      {"01-repeated-factor-graphs", [&] { return repeated_factor_graphs(depth); }},
      {"02-covering-example", [] { return covering_example(); }},
      {"03-covering-count", [&] { return covering_formula(10 * depth); }},
      {"04-neutral-complexity", [&] { return neutral_complexity(depth); }},
      {"05-cassaigne-identities", [&] { return cassaigne(depth); }},
      {"06-threshold-order", [&] { return threshold_order(depth); }},
      {"07-complexity-growth", [&] { return growth(std::max<std::size_t>(depth, 48)); }},
      {"08-ar-round-trip", [&] { return ar_round_trip(trials, rng); }},
      {"09-sturmian-recognition", [&] { return sturmian(depth, 5); }},
      {"10-riet-pipeline", [&] { return riet_pipeline(10, rng); }},
      {"11-riet-non-preservation", [&] { return riet_non_preservation(depth); }},
      {"12-rejection-witnesses", [] { return curated_witnesses(10); }},
      {"13-limit-words", [&] { return limit_words(trials, rng); }},
  };
  VerifyReport report;
  for (const auto& [name, run] : checks) {
    const auto start = std::chrono::steady_clock::now();
    VerifyCheck c;
    c.name = name;
    try {
      const Outcome o = run();
      c.pass = o.pass;
      c.detail = o.detail;
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace dendric
