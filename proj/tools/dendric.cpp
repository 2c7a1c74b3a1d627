// Command-line driver for the dendric library.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI/CLI.hpp>
#include <nlohmann/json.hpp>

#include "dendric/ar_decompose.hpp"
#include "dendric/complexity.hpp"
#include "dendric/coverings.hpp"
#include "dendric/extension.hpp"
#include "dendric/iet.hpp"
#include "dendric/source.hpp"
#include "dendric/verify.hpp"

namespace {

using namespace dendric;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
  std::string source;
  std::string morphism;
  std::string orders;
  std::string graph;
  std::string format = "table";
  std::optional<std::size_t> depth;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
};

std::size_t depth_or(const Options& o, std::size_t fallback) {
  return o.depth.value_or(fallback);
}

std::optional<std::size_t> source_depth(const Options& o) {
  if (o.depth) return o.depth;
  if (o.source.rfind("file:", 0) == 0) return std::nullopt;
  return 12;
}

std::string threshold_text(const Threshold& t, std::size_t depth) {
  return t.certified ? std::to_string(t.value) : ">" + std::to_string(depth);
}

std::string shape(const FactorClass& c) {
  if (c.dendric) return "dendric";
  if (c.acyclic) return "acyclic";
  if (c.connected) return "connected";
  return "cyclic-disconnected";
}

std::string special(const FactorClass& c) {
  if (c.bispecial) return "bispecial";
  if (c.left_special) return "left";
  if (c.right_special) return "right";
  return "-";
}

std::string edges_text(const Alphabet& a, const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& [x, y] : edges) {
    if (!out.empty()) out += ",";
    out += a.name(x) + a.name(y);
  }
  return out;
}

int run_classify(const Options& o) {
  const LanguageWindow win = window_from_source(o.source, source_depth(o));
  if (o.format == "lines") {
    std::cout << format_window(win);
    return kOk;
  }
  const ThresholdReport t = thresholds(win);
  const std::size_t d = win.scan_depth();
  if (o.format == "json") {
    json factors = json::array();
    for (std::size_t n = 0; n <= d; ++n) {
      const auto words = win.level(n);
      const auto graphs = level_graphs(win, n);
      for (std::size_t i = 0; i < words.size(); ++i) {
        const FactorClass c = classify(graphs[i]);
        factors.push_back({{"factor", win.alphabet().format(words[i])},
                           {"multiplicity", c.multiplicity},
                           {"sign", to_string(c.sign)},
                           {"acyclic", c.acyclic},
                           {"connected", c.connected},
                           {"dendric", c.dendric},
                           {"special", special(c)}});
      }
    }
    json out = {{"source", win.source()},
                {"maxlen", win.max_len()},
                {"scan_depth", d},
                {"factors", factors},
                {"thresholds",
                 {{"K", threshold_text(t.weak_or_neutral, d)},
                  {"M", threshold_text(t.acyclic, d)},
                  {"M'", threshold_text(t.neutral, d)},
                  {"N", threshold_text(t.dendric, d)}}}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "# " << win.source() << " maxlen=" << win.max_len()
            << " scan_depth=" << d << "\n";
  std::cout << "factor\tm\tsign\tshape\tspecial\n";
  for (std::size_t n = 0; n <= d; ++n) {
    const auto words = win.level(n);
    const auto graphs = level_graphs(win, n);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const FactorClass c = classify(graphs[i]);
      std::cout << display(win.alphabet(), words[i]) << "\t" << c.multiplicity
                << "\t" << to_string(c.sign) << "\t" << shape(c) << "\t"
                << special(c) << "\n";
    }
  }
  std::cout << "thresholds K=" << threshold_text(t.weak_or_neutral, d)
            << " M=" << threshold_text(t.acyclic, d)
            << " M'=" << threshold_text(t.neutral, d)
            << " N=" << threshold_text(t.dendric, d) << "\n";
  return kOk;
}

int run_complexity(const Options& o) {
  const LanguageWindow win = window_from_source(o.source, source_depth(o));
  const auto profile = complexity_profile(win);
  std::cout << "n\tp(n)\n";
  for (std::size_t n = 0; n < profile.p.size(); ++n)
    std::cout << n << "\t" << profile.p[n] << "\n";
  if (win.max_len() < 3) return kOk;
  const auto r = check_cassaigne_identities(win);
  if (r.holds()) {
    std::cout << "cassaigne: holds for n<=" << r.checked_up_to << "\n";
    return kOk;
  }
  std::cout << "cassaigne: " << r.violation->identity << " identity fails at n="
            << r.violation->n << " (expected " << r.violation->expected
            << ", got " << r.violation->actual << ")\n";
  return kViolation;
}

int run_coverings(const Options& o) {
  const std::size_t depth = depth_or(o, 12);
  const Morphism sigma = Morphism::parse(o.morphism);
  const LanguageWindow win = window_from_source(o.source, depth + 2);
  const LanguageWindow image = apply_to_window(sigma, win, depth);
  int status = kOk;
  std::cout << "n\tc(n)\tp_image(n)\tp(n)\n";
  for (std::size_t n = 1; n <= depth; ++n) {
    const std::size_t c = covering_count(sigma, win, n);
    std::cout << n << "\t" << c << "\t" << image.count(n) << "\t" << win.count(n)
              << "\n";
    if (image.count(n) > c) status = kViolation;
  }
  return status;
}

int run_decompose(const Options& o) {
  const Morphism sigma = Morphism::parse(o.morphism);
  const auto result = decompose(sigma);
  if (const auto* f = std::get_if<ARFactorization>(&result)) {
    std::cout << f->to_string() << "\n";
    return kOk;
  }
  std::cout << std::get<RejectionCertificate>(result).to_string() << "\n";
  return kViolation;
}

int run_iet(const Options& o) {
  if (o.source.rfind("iet:", 0) != 0)
    throw PreconditionError("iet needs --source iet:<exchange>");
  const IetText t = parse_iet(std::string_view(o.source).substr(4));
  const KeaneReport keane = keane_check(t.iet);
  std::cout << "exchange: " << t.iet.to_string() << "\n";
  std::cout << "keane: " << to_string(keane.verdict);
  if (keane.verdict == KeaneVerdict::orbit_collision)
    std::cout << " (T^" << keane.steps << "(" << keane.from->to_string()
              << ") = " << keane.to->to_string() << ")";
  std::cout << "\n";
  if (keane.verdict != KeaneVerdict::regular_certified) return kViolation;

  const LanguageWindow win = natural_coding(t.iet, t.point, depth_or(o, 12));
  if (o.format == "lines") {
    std::cout << format_window(win);
    return kOk;
  }
  std::cout << "empty graph: " << edges_text(win.alphabet(), extension_graph(win, {}).edges)
            << "\n";
  std::cout << "p:";
  for (std::size_t n = 0; n <= win.max_len(); ++n) std::cout << " " << win.count(n);
  std::cout << "\n";
  const FzReport fz = check_fz_conditions(win, t.iet.orders());
  if (fz.holds()) {
    std::cout << "planarity: holds for n<=" << win.scan_depth() << "\n";
    return kOk;
  }
  std::cout << "planarity: item " << fz.violation->item << " fails at "
            << display(win.alphabet(), fz.violation->word) << ": "
            << fz.violation->detail << "\n";
  return kViolation;
}

int run_realize(const Options& o) {
  const Alphabet alphabet = alphabet_of_orders(o.orders);
  const OrderPair orders = parse_orders(alphabet, o.orders);
  const std::vector<Edge> graph = parse_edges(alphabet, o.graph);
  std::optional<IntervalExchange> t;
  try {
    t = realize_graph_as_iet(alphabet, graph, orders);
  } catch (const RealizationError& e) {
    std::cout << "not realizable: " << e.what() << "\n";
    return kViolation;
  }
  std::cout << t->to_string() << "\n";
  const LanguageWindow win = natural_coding(*t, ExactReal(), depth_or(o, 12));
  const auto edges = extension_graph(win, {}).edges;
  const bool same = edges == graph;
  std::cout << "empty graph: " << edges_text(alphabet, edges)
            << (same ? " (matches)" : " (differs)") << "\n";
  return same ? kOk : kViolation;
}

int run_verify(const Options& o) {
  const VerifyReport report = run_verify_suite(depth_or(o, 20), o.trials, o.seed);
  std::cout << report.to_string();
  for (const auto& c : report.checks)
    std::cerr << c.name << ": " << c.seconds << "s\n";
  return report.all_pass() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dendric words, Arnoux-Rauzy morphisms and interval exchanges"};
  app.require_subcommand(1);
  Options o;

  auto add_depth = [&](CLI::App* cmd, const std::string& what) {
    cmd->add_option("--depth", o.depth, what)->check(CLI::Range(2, 100000));
  };
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--source", o.source,
                    "periodic:<u>[.<v>], substitutive:<rules>@<seed>, "
                    "iet:<exchange>, file:<path>")
        ->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "table, lines or json")
        ->check(CLI::IsMember({"table", "lines", "json"}));
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify every factor");
  add_source(classify_cmd);
  add_depth(classify_cmd, "Window length (default 12)");
  add_format(classify_cmd);

  auto* complexity_cmd = app.add_subcommand("complexity", "Factor complexity table");
  add_source(complexity_cmd);
  add_depth(complexity_cmd, "Window length (default 12)");

  auto* coverings_cmd = app.add_subcommand("coverings", "Covering counts under a morphism");
  add_source(coverings_cmd);
  coverings_cmd->add_option("--morphism", o.morphism, "Rules like a->ab;b->a")->required();
  add_depth(coverings_cmd, "Largest n (default 12)");

  auto* decompose_cmd = app.add_subcommand("decompose", "Factor a morphism over Arnoux-Rauzy morphisms");
  decompose_cmd->add_option("--morphism", o.morphism, "Rules like a->ab;b->a")->required();

  auto* iet_cmd = app.add_subcommand("iet", "Regularity and coding of an interval exchange");
  add_source(iet_cmd);
  add_depth(iet_cmd, "Window length (default 12)");
  add_format(iet_cmd);

  auto* realize_cmd = app.add_subcommand("realize", "Exchange with a prescribed empty-word graph");
  realize_cmd->add_option("graph", o.graph, "Edges like ab,bb,bc")->required();
  realize_cmd->add_option("--orders", o.orders, "Orders like a<b<c | c<b<a")->required();
  add_depth(realize_cmd, "Window length of the round trip (default 12)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the property battery");
  add_depth(verify_cmd, "Scan depth, at least 6 (default 20)");
  verify_cmd->add_option("--trials", o.trials, "Random cases per check (default 200)");
  verify_cmd->add_option("--seed", o.seed, "Generator seed (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return run_classify(o);
    if (*complexity_cmd) return run_complexity(o);
    if (*coverings_cmd) return run_coverings(o);
    if (*decompose_cmd) return run_decompose(o);
    if (*iet_cmd) return run_iet(o);
    if (*realize_cmd) return run_realize(o);
    if (*verify_cmd) return run_verify(o);
  } catch (const dendric::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
