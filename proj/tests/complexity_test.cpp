#include <gtest/gtest.h>

#include "dendric/complexity.hpp"
#include "dendric/error.hpp"
#include "dendric/morphism.hpp"
#include "oracle.hpp"

using namespace dendric;

namespace {

LanguageWindow fibonacci(std::size_t n) {
  return window_from_substitutive(Morphism::parse("a->ab;b->a"), 0, n);
}

LanguageWindow thue_morse(std::size_t n) {
  return window_from_substitutive(Morphism::parse("a->ab;b->ba"), 0, n);
}

}  // namespace

TEST(Complexity, ThueMorseOracle) {
  const auto prof = complexity_profile(thue_morse(8));
  EXPECT_EQ(prof.p, (std::vector<std::size_t>{1, 2, 4, 6, 10, 12, 16, 20, 22}));
  EXPECT_EQ(prof.s, (std::vector<long>{1, 2, 2, 4, 2, 4, 4, 2}));
}

TEST(Complexity, Degrees) {
  const auto win = fibonacci(6);
  const Alphabet& ab = win.alphabet();
  EXPECT_EQ(right_degree(win, ab.parse("a")), 2u);
  EXPECT_EQ(right_degree(win, ab.parse("b")), 1u);
  EXPECT_EQ(left_degree(win, ab.parse("aba")), 2u);
  EXPECT_EQ(left_degree(win, {}), 2u);
}

TEST(Complexity, CassaigneHoldsOnFibonacciAndThueMorse) {
  for (const auto& win : {fibonacci(16), thue_morse(16)}) {
    const auto r = check_cassaigne_identities(win);
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.checked_up_to, 14u);
  }
  EXPECT_THROW(check_cassaigne_identities(fibonacci(2)), PreconditionError);
}

TEST(CodeBounds, NeutralWindowGivesEquality) {
  const auto win = window_from_substitutive(Morphism::parse("a->ab;b->ac;c->a"), 0, 10);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto c = random_maximal_code(win, 1, 5, 12, rng);
    ASSERT_TRUE(is_x_maximal_suffix_code(win, c));
    const auto r = check_suffix_code_bounds(win, c, 1, 5, BoundMode::strong_or_neutral);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.sum, 2);
    EXPECT_EQ(r.at_shortest, 2);
    EXPECT_EQ(r.at_longest, 2);
  }
}

TEST(CodeBounds, RejectsNonMaximalCode) {
  const auto win = fibonacci(8);
  const std::vector<Word> code{win.alphabet().parse("a")};
  EXPECT_THROW(check_suffix_code_bounds(win, code, 1, 1, BoundMode::weak_or_neutral),
               PreconditionError);
}

TEST(CodeBounds, LongestBeyondScanDepth) {
  const auto win = fibonacci(8);
  EXPECT_THROW(check_suffix_code_bounds(win, win.level(7), 7, 7,
                                        BoundMode::weak_or_neutral),
               PreconditionError);
}

TEST(CodeRewrites, PreserveMaximality) {
  const auto win = thue_morse(10);
  std::mt19937_64 rng(11);
  for (auto side : {CodeSide::suffix, CodeSide::prefix}) {
    for (int t = 0; t < 10; ++t) {
      auto code = random_maximal_code(win, 2, 5, 15, rng, side);
      auto check = [&](std::span<const Word> c) {
        return side == CodeSide::suffix ? is_x_maximal_suffix_code(win, c)
                                        : is_x_maximal_prefix_code(win, c);
      };
      ASSERT_TRUE(check(code));
      EXPECT_TRUE(check(lengthen_shortest(win, code, side)));
      EXPECT_TRUE(check(shorten_longest(win, code, side)));
      const Word w = code.front();
      const auto refined = refine_member(win, code, w, side);
      EXPECT_TRUE(check(refined));
      const auto back = coarsen_member(win, refined, w, side);
      ASSERT_TRUE(back);
      auto sorted = code;
      std::sort(sorted.begin(), sorted.end());
      auto again = *back;
      std::sort(again.begin(), again.end());
      EXPECT_EQ(again, sorted);
    }
  }
}
