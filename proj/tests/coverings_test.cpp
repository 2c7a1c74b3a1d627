#include <gtest/gtest.h>

#include "dendric/complexity.hpp"
#include "dendric/coverings.hpp"
#include "dendric/error.hpp"
#include "oracle.hpp"

using namespace dendric;

namespace {

const std::vector<std::pair<char, std::string>> kFibRules{{'a', "ab"}, {'b', "a"}};

LanguageWindow fibonacci(std::size_t n) {
  return window_from_substitutive(Morphism::parse("a->ab;b->a"), 0, n);
}

std::set<std::string> words(const Alphabet& a, const std::vector<Word>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(a.format(w));
  return out;
}

}  // namespace

TEST(Coverings, WorkedExample) {
  const Morphism sigma = Morphism::parse("a->ab;b->abb");
  const Alphabet& ab = sigma.domain();
  const Word u = ab.parse("babb");
  const auto periodic = window_from_two_sided_periodic(ab, ab.parse("abb"),
                                                       ab.parse("abb"), 6);
  EXPECT_EQ(coverings_of(u, sigma, periodic),
            (std::vector<Covering>{{ab.parse("ab"), 1, u}, {ab.parse("bb"), 2, u}}));
  EXPECT_EQ(coverings_of(u, sigma, fibonacci(6)),
            (std::vector<Covering>{{ab.parse("ab"), 1, u}}));
  EXPECT_THROW(coverings_of(u, sigma, fibonacci(5)), PreconditionError);
  EXPECT_THROW(coverings_of({}, sigma, fibonacci(6)), PreconditionError);
}

TEST(Coverings, SingleLetters) {
  const Morphism sigma = Morphism::parse("a->aba;b->bb");
  const auto win = fibonacci(5);
  const Alphabet& ab = sigma.codomain();
  const auto cov = coverings_of(ab.parse("b"), sigma, win);
  EXPECT_EQ(cov, (std::vector<Covering>{{ab.parse("a"), 1, ab.parse("b")},
                                        {ab.parse("b"), 0, ab.parse("b")},
                                        {ab.parse("b"), 1, ab.parse("b")}}));
  EXPECT_EQ(covering_count(sigma, win, 1), sigma.total_length());
}

TEST(Coverings, MatchBruteForce) {
  const std::string sample = oracle::iterate(kFibRules, "a", 20);
  const std::vector<std::pair<char, std::string>> rules{{'a', "ab"}, {'b', "abb"}};
  const Morphism sigma = Morphism::parse("a->ab;b->abb");
  const auto win = fibonacci(12);
  for (std::size_t n = 1; n <= 10; ++n) {
    std::set<oracle::Cover> got;
    for (const auto& c : enumerate_coverings(sigma, win, n))
      got.insert({win.alphabet().format(c.w), c.offset, win.alphabet().format(c.covered)});
    EXPECT_EQ(got, oracle::coverings(sample, rules, n)) << n;
    EXPECT_EQ(covering_count(sigma, win, n), got.size());
  }
}

TEST(Coverings, IdentityCountsFactors) {
  const auto win = fibonacci(14);
  const auto id = Morphism::identity(win.alphabet());
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(covering_count(id, win, n), win.count(n));
}

TEST(Wn, FibonacciLevels) {
  const Morphism fib = Morphism::parse("a->ab;b->a");
  const auto win = fibonacci(8);
  const Alphabet& ab = win.alphabet();
  EXPECT_EQ(words(ab, build_wn(fib, win, 1)), (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(words(ab, build_wn(fib, win, 2)), (std::set<std::string>{"a", "ab"}));
  EXPECT_EQ(words(ab, build_wn(fib, win, 5)),
            (std::set<std::string>{"aab", "aba", "baa", "abab"}));
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto wn = build_wn(fib, win, n);
    EXPECT_TRUE(is_x_maximal_suffix_code(win, wn)) << n;
    for (const auto& w : wn) {
      EXPECT_LE(w.size(), n);
      EXPECT_GE(2 * w.size(), n);
    }
  }
  EXPECT_THROW(build_wn(fib, win, 9), PreconditionError);
}

TEST(Wn, ShortLengthsGiveLetters) {
  const Morphism m = Morphism::parse("a->aab;b->bab");
  const auto win = fibonacci(6);
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_EQ(build_wn(m, win, n), (std::vector<Word>{Word{0}, Word{1}}));
}

TEST(CoveringRecurrence, Fibonacci) {
  const Morphism fib = Morphism::parse("a->ab;b->a");
  const auto r = check_covering_recurrence(fib, fibonacci(52), 50);
  ASSERT_TRUE(r.holds()) << r.failure;
  ASSERT_EQ(r.steps.size(), 49u);
  for (const auto& s : r.steps) {
    EXPECT_EQ(s.increment, 1);
    EXPECT_EQ(s.relation, "=");
  }
  EXPECT_THROW(check_covering_recurrence(fib, fibonacci(20), 19), PreconditionError);
}

TEST(CoveringRecurrence, TribonacciUnderLeftGenerator) {
  const auto trib = window_from_substitutive(Morphism::parse("a->ab;b->ac;c->a"), 0, 32);
  const auto r = check_covering_recurrence(arnoux_rauzy(Side::L, 0, trib.alphabet()), trib, 30);
  ASSERT_TRUE(r.holds()) << r.failure;
  for (const auto& s : r.steps) EXPECT_EQ(s.increment, 2);
}

TEST(CoveringRecurrence, IdentityIsCassaigne) {
  const auto tm = window_from_substitutive(Morphism::parse("a->ab;b->ba"), 0, 14);
  const auto r = check_covering_recurrence(Morphism::identity(tm.alphabet()), tm, 12);
  ASSERT_TRUE(r.holds()) << r.failure;
  const auto prof = complexity_profile(tm);
  for (const auto& s : r.steps) EXPECT_EQ(s.increment, prof.s[s.n]);
}

TEST(Growth, ThueMorseOfFibonacci) {
  const auto r = complexity_growth(Morphism::parse("a->ab;b->ba"), fibonacci(31), 29);
  std::vector<long> expect(29, 2);
  expect[0] = 0;
  expect[1] = 1;
  EXPECT_EQ(r.difference, expect);
  EXPECT_EQ(r.max, 2);
  EXPECT_EQ(r.argmax, 3u);
  EXPECT_TRUE(r.settled);
  EXPECT_TRUE(r.covered);
}
