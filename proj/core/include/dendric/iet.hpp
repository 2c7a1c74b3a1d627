#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dendric/exact_real.hpp"
#include "dendric/extension.hpp"
#include "dendric/language_window.hpp"
#include "dendric/morphism.hpp"

namespace dendric {

/// Two total orders on an alphabet, each listed from smallest to largest.
/// `leq` cuts [0,1) into the intervals I_a, `preceq` into the J_a.
struct OrderPair {
  std::vector<Letter> leq;
  std::vector<Letter> preceq;

  /// rank[a] = position of a in the order.
  std::vector<std::size_t> leq_rank() const;
  std::vector<std::size_t> preceq_rank() const;

  /// Both orders are permutations of the same k letters.
  void validate(std::size_t k) const;
  /// For every 1 <= i < k the i smallest letters differ between the orders.
  bool irreducible() const;
  /// Both orders reversed.
  OrderPair reversed() const;

  auto operator<=>(const OrderPair&) const = default;
};

/// `a<b<c | b<a<c`: the first order is ≤, the second ≼.
std::string format_orders(const Alphabet& alphabet, const OrderPair& orders);
OrderPair parse_orders(const Alphabet& alphabet, std::string_view text);
/// Alphabet of the letters in an order text, sorted by name.
Alphabet alphabet_of_orders(std::string_view text);

class IntervalExchange {
 public:
  /// lengths[a] > 0 summing to 1. Throws PreconditionError.
  IntervalExchange(Alphabet alphabet, OrderPair orders,
                   std::vector<ExactReal> lengths);

  const Alphabet& alphabet() const { return alphabet_; }
  const OrderPair& orders() const { return orders_; }
  const std::vector<ExactReal>& lengths() const { return lengths_; }

  /// Left end of I_a and of J_a.
  const ExactReal& i_start(Letter a) const { return i_start_[a]; }
  const ExactReal& j_start(Letter a) const { return j_start_[a]; }

  /// The letter a with z in I_a. Requires 0 <= z < 1.
  Letter letter_at(const ExactReal& z) const;
  ExactReal apply(const ExactReal& z) const;
  /// The inverse map: the same lengths with the orders exchanged.
  IntervalExchange inverse() const;

  /// `orders: a<b | b<a ; lengths: a=..., b=...`.
  std::string to_string() const;

 private:
  Alphabet alphabet_;
  OrderPair orders_;
  std::vector<ExactReal> lengths_;
  std::vector<ExactReal> i_start_;
  std::vector<ExactReal> j_start_;
};

/// An exchange together with a starting point (default 0). Text form:
/// `orders: ... ; lengths: ... [; point: z]`.
struct IetText {
  IntervalExchange iet;
  ExactReal point;
};
IetText parse_iet(std::string_view text);

enum class KeaneVerdict { regular_certified, rationally_dependent, orbit_collision };
const char* to_string(KeaneVerdict verdict);

struct KeaneReport {
  KeaneVerdict verdict = KeaneVerdict::rationally_dependent;
  /// For a collision: T^steps(from) = to, both nonzero cut points.
  std::size_t steps = 0;
  std::optional<ExactReal> from, to;
};

/// Regular when the orders are irreducible and the lengths are linearly
/// independent over Q. Otherwise the orbits of the nonzero cut points are
/// followed for `depth` steps looking for one that hits a cut point.
KeaneReport keane_check(const IntervalExchange& t, std::size_t depth = 64);

/// Window of the natural coding of z. The orbit is followed H steps in each
/// direction, H = 4 · max_len · |A| doubled until two consecutive horizons
/// give the same valid window; for a regular exchange the top level must
/// also hold (|A| - 1) · max_len + 1 factors. Throws PreconditionError for an exchange that
/// is not certified regular unless `allow_irregular`.
LanguageWindow natural_coding(const IntervalExchange& t, const ExactReal& z,
                              std::size_t max_len, bool allow_irregular = false);

struct FzViolation {
  Word word;
  int item = 0;  // 1: crossing edges, 2: consecutive left extensions
  std::string detail;
};

struct FzReport {
  std::optional<FzViolation> violation;
  bool holds() const { return !violation; }
};

/// Checks both planarity conditions for every factor of length in
/// [min_length, scan depth].
FzReport check_fz_conditions(const LanguageWindow& win, const OrderPair& orders,
                             std::size_t min_length = 0);

/// Every order pair satisfying both conditions at full depth, sorted.
/// Requires an alphabet of at most 6 letters.
std::vector<OrderPair> find_planar_orders(const LanguageWindow& win,
                                          std::size_t min_length = 0);

class RealizationError : public Error {
 public:
  enum class Kind {
    not_connected,
    not_planar,
    reducible_orders,
    not_realizable,
    basis_exhausted,
  };
  RealizationError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// An exchange whose codings have G as the extension graph of the empty
/// word. The overlaps |J_a ∩ I_b| of the edges form a positive circulation;
/// its free part is perturbed by distinct basis surds so that the lengths
/// are rationally independent.
IntervalExchange realize_graph_as_iet(const Alphabet& alphabet,
                                      const std::vector<Edge>& graph,
                                      const OrderPair& orders);

/// `ab,bc,...`: two-letter pairs, left vertex first.
std::vector<Edge> parse_edges(const Alphabet& alphabet, std::string_view text);

/// Edge sets of every connected graph planar for the orders: the monotone
/// staircases through the (≼, ≤) grid.
std::vector<std::vector<Edge>> planar_trees(const OrderPair& orders);

/// Every irreducible order pair on k letters.
std::vector<OrderPair> irreducible_order_pairs(std::size_t k);

struct ArImageReport {
  ExtensionGraph empty_graph;     // E(ε) of the image
  bool star = false;              // equals ({ℓ} × A) ∪ (A × {ℓ})
  std::vector<OrderPair> planar;  // planar order pairs of the image
  FzReport nonempty;              // original orders on nonempty factors
  bool holds() const { return star && planar.empty() && nonempty.holds(); }
};

/// Image of the coding of t under L_ℓ or R_ℓ, examined to `depth`.
/// Requires ℓ to be neither the least nor the greatest letter for ≤.
ArImageReport check_ar_image_of_riet(Letter ell, Side side,
                                     const IntervalExchange& t,
                                     std::size_t depth);

}  // namespace dendric
