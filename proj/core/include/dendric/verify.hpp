#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dendric/iet.hpp"
#include "dendric/language_window.hpp"

namespace dendric {

struct NamedWindow {
  std::string name;
  LanguageWindow window;
};

/// Regular exchanges with the symmetric orders a<b<c | c<b<a and
/// a<b<c<d | d<c<b<a, realizing an alternating staircase.
IntervalExchange sample_riet(std::size_t letters);

/// Periodic, Sturmian, Arnoux-Rauzy, exchange codings, morphic images and
/// Thue-Morse windows of the given depth.
std::vector<NamedWindow> window_matrix(std::size_t max_len);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;  // sorted by name
  bool all_pass() const;
  /// One `PASS name: detail` or `FAIL name: detail` line per check.
  /// Timings are left out so that the text is reproducible.
  std::string to_string() const;
};

/// Runs the property battery at scan depth `depth` (>= 6) with `trials`
/// random cases, all randomness drawn from one generator seeded by `seed`.
VerifyReport run_verify_suite(std::size_t depth, std::size_t trials,
                              std::uint64_t seed);

}  // namespace dendric
