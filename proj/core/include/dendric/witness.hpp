#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dendric/extension.hpp"
#include "dendric/iet.hpp"
#include "dendric/morphism.hpp"

namespace dendric {

/// A dendric coding x of a regular exchange whose image σ(x) has a factor
/// that is not dendric.
struct DendricityWitness {
  OrderPair orders;
  std::vector<Edge> tree;  // E(ε) of x
  IntervalExchange iet;
  LanguageWindow source;
  LanguageWindow image;
  ExtensionGraph graph;  // of the offending factor in the image
  FactorClass factor_class;
};

/// Searches the codings of regular exchanges realizing each planar tree for
/// each irreducible order pair, with image windows of depth `depth`.
/// Requires 2 to 4 domain letters. Returns nullopt when none is found.
std::optional<DendricityWitness> find_dendricity_counterexample(
    const Morphism& sigma, std::size_t depth);

}  // namespace dendric
