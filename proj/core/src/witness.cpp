#include "dendric/witness.hpp"

namespace dendric {

std::optional<DendricityWitness> find_dendricity_counterexample(
    const Morphism& sigma, std::size_t depth) {
  const std::size_t k = sigma.domain().size();
  if (k < 2 || k > 4)
    throw PreconditionError("witness search needs 2 to 4 letters");
  if (depth < 2) throw PreconditionError("depth must be at least 2");
  for (const OrderPair& orders : irreducible_order_pairs(k)) {
    for (const auto& tree : planar_trees(orders)) {
      std::optional<IntervalExchange> t;
      try {
        t = realize_graph_as_iet(sigma.domain(), tree, orders);
      } catch (const RealizationError&) {
        continue;
      }
      LanguageWindow source = natural_coding(*t, ExactReal(), depth + 2);
      if (!is_dendric_certified(source)) continue;
      LanguageWindow image = apply_to_window(sigma, source, depth);
      for (std::size_t n = 0; n <= image.scan_depth(); ++n) {
        for (auto& g : level_graphs(image, n)) {
          const FactorClass c = classify(g);
          if (c.dendric) continue;
          return DendricityWitness{orders,           tree,
                                   std::move(*t),    std::move(source),
                                   std::move(image), std::move(g),
                                   c};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace dendric
