#include "dendric/coverings.hpp"

#include <algorithm>

#include "dendric/complexity.hpp"
#include "dendric/error.hpp"
#include "dendric/extension.hpp"

namespace dendric {

namespace {

void require_same_domain(const Morphism& sigma, const LanguageWindow& win) {
  if (!(sigma.domain() == win.alphabet()))
    throw PreconditionError("morphism domain differs from the window alphabet");
}

void require_depth(const LanguageWindow& win, std::size_t need) {
  if (win.max_len() < need)
    throw PreconditionError("window depth " + std::to_string(win.max_len()) +
                            " < " + std::to_string(need));
}

struct OffsetRange {
  std::size_t lo = 0, hi = 0;  // half-open
};

// Offsets k making (w, k) a minimal covering of a word of length n.
OffsetRange covering_offsets(const Morphism& sigma, const Word& w,
                             std::size_t n) {
  std::size_t total = 0;
  for (Letter a : w) total += sigma.image(a).size();
  const std::size_t first = sigma.image(w.front()).size();
  const std::size_t head = total - sigma.image(w.back()).size();
  if (total < n) return {};
  const std::size_t lo = head + 1 > n ? head + 1 - n : 0;
  const std::size_t hi = std::min(first, total - n + 1);
  return lo < hi ? OffsetRange{lo, hi} : OffsetRange{};
}

}  // namespace

std::vector<Covering> coverings_of(const Word& u, const Morphism& sigma,
                                   const LanguageWindow& win) {
  if (u.empty()) throw PreconditionError("cannot cover the empty word");
  require_same_domain(sigma, win);
  require_depth(win, u.size() + 2);
  std::vector<Covering> out;
  for (std::size_t m = 1; m <= u.size(); ++m) {
    for (const Word& w : win.level(m)) {
      const auto [lo, hi] = covering_offsets(sigma, w, u.size());
      if (lo >= hi) continue;
      const Word img = sigma.apply(w);
      for (std::size_t k = lo; k < hi; ++k)
        if (std::equal(u.begin(), u.end(), img.begin() + k))
          out.push_back({w, k, u});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Covering> enumerate_coverings(const Morphism& sigma,
                                          const LanguageWindow& win,
                                          std::size_t n) {
  if (n == 0) throw PreconditionError("covering length must be positive");
  require_same_domain(sigma, win);
  require_depth(win, n + 2);
  std::vector<Covering> out;
  for (std::size_t m = 1; m <= n; ++m) {
    for (const Word& w : win.level(m)) {
      const auto [lo, hi] = covering_offsets(sigma, w, n);
      if (lo >= hi) continue;
      const Word img = sigma.apply(w);
      for (std::size_t k = lo; k < hi; ++k)
        out.push_back({w, k, slice(img, k, n)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t covering_count(const Morphism& sigma, const LanguageWindow& win,
                           std::size_t n) {
  if (n == 0) throw PreconditionError("covering length must be positive");
  require_same_domain(sigma, win);
  require_depth(win, n + 2);
  std::size_t count = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    for (const Word& w : win.level(m)) {
      const auto [lo, hi] = covering_offsets(sigma, w, n);
      count += hi - lo;
    }
  }
  return count;
}

std::vector<Word> build_wn(const Morphism& sigma, const LanguageWindow& win,
                           std::size_t n) {
  if (n == 0) throw PreconditionError("W_n needs n >= 1");
  require_same_domain(sigma, win);
  require_depth(win, n);
  std::vector<Word> out;
  for (std::size_t m = 1; m <= n; ++m) {
    for (const Word& w : win.level(m)) {
      std::size_t total = 0;
      for (Letter a : w) total += sigma.image(a).size();
      const std::size_t tail = total - sigma.image(w.front()).size();
      if (tail < n && n <= total) out.push_back(w);
    }
  }
  return out;
}

CoveringRecurrenceReport check_covering_recurrence(const Morphism& sigma,
                                                   const LanguageWindow& win,
                                                   std::size_t n_max) {
  require_same_domain(sigma, win);
  require_depth(win, n_max + 2);
  const auto profile = complexity_profile(win);
  const Threshold neutral = property_threshold(
      win, [](const FactorClass& c) { return c.sign == Sign::neutral; });
  const Threshold not_weak = property_threshold(
      win, [](const FactorClass& c) { return c.sign != Sign::weak; });
  const Threshold not_strong = property_threshold(
      win, [](const FactorClass& c) { return c.sign != Sign::strong; });
  auto above = [](const Threshold& t, std::size_t len) {
    return t.certified && len >= t.value;
  };

  CoveringRecurrenceReport report;
  if (n_max < 2) return report;
  long previous = static_cast<long>(covering_count(sigma, win, 1));
  for (std::size_t n = 1; n < n_max; ++n) {
    const long next = static_cast<long>(covering_count(sigma, win, n + 1));
    CoveringStep step;
    step.n = n;
    step.increment = next - previous;
    step.s = profile.s[n];
    std::size_t shortest = n;
    for (const Word& w : build_wn(sigma, win, n)) {
      step.code_excess += static_cast<long>(right_degree(win, w)) - 1;
      shortest = std::min(shortest, w.size());
    }
    if (step.increment != step.code_excess) {
      report.failed_at = n;
      report.failure = "c(n+1) - c(n) = " + std::to_string(step.increment) +
                       " but the W_n excess is " +
                       std::to_string(step.code_excess);
    } else if (above(neutral, shortest)) {
      step.relation = "=";
      if (step.increment != step.s) report.failed_at = n;
    } else if (above(not_weak, shortest)) {
      step.relation = "<=";
      if (step.increment > step.s) report.failed_at = n;
    } else if (above(not_strong, shortest)) {
      step.relation = ">=";
      if (step.increment < step.s) report.failed_at = n;
    }
    if (report.failed_at && report.failure.empty())
      report.failure = "increment " + std::to_string(step.increment) +
                       " violates " + step.relation + " s(n) = " +
                       std::to_string(step.s);
    report.steps.push_back(step);
    if (report.failed_at) return report;
    previous = next;
  }
  return report;
}

GrowthReport complexity_growth(const Morphism& sigma, const LanguageWindow& win,
                               std::size_t n_max) {
  if (n_max == 0) throw PreconditionError("growth needs n_max >= 1");
  const LanguageWindow image = apply_to_window(sigma, win, n_max);
  GrowthReport report;
  report.covered = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const long d = static_cast<long>(image.count(n)) - static_cast<long>(win.count(n));
    report.difference.push_back(d);
    if (n == 1 || d > report.max) {
      report.max = d;
      report.argmax = n;
    }
    if (image.count(n) > covering_count(sigma, win, n)) report.covered = false;
  }
  report.settled = true;
  for (std::size_t n = report.argmax; n < n_max; ++n)
    if (report.difference[n] > report.difference[n - 1]) report.settled = false;
  return report;
}

}  // namespace dendric
