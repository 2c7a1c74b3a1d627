// Invariants checked over every window of the test matrix.
#include <gtest/gtest.h>

#include <random>

#include "dendric/ar_decompose.hpp"
#include "dendric/complexity.hpp"
#include "dendric/coverings.hpp"
#include "dendric/extension.hpp"
#include "dendric/verify.hpp"

using namespace dendric;

namespace {

const std::vector<NamedWindow>& matrix() {
  static const auto m = window_matrix(14);
  return m;
}

class Matrix : public ::testing::TestWithParam<std::size_t> {
 protected:
  const NamedWindow& named() const { return matrix()[GetParam()]; }
  const LanguageWindow& win() const { return named().window; }
};

std::string name_of(const ::testing::TestParamInfo<std::size_t>& info) {
  std::string out;
  for (char c : matrix()[info.param].name)
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

}  // namespace

TEST_P(Matrix, ClosedAndBiextendable) {
  const auto& w = win();
  for (std::size_t n = 1; n <= w.max_len(); ++n)
    for (const Word& u : w.level(n)) {
      ASSERT_TRUE(w.contains(slice(u, 1, n - 1)));
      ASSERT_TRUE(w.contains(slice(u, 0, n - 1)));
    }
  for (std::size_t n = 0; n < w.max_len(); ++n)
    for (const Word& u : w.level(n)) {
      EXPECT_GE(left_degree(w, u), 1u);
      EXPECT_GE(right_degree(w, u), 1u);
    }
}

TEST_P(Matrix, GraphShapes) {
  const auto& w = win();
  for (std::size_t n = 0; n <= w.scan_depth(); ++n)
    for (const auto& g : level_graphs(w, n)) {
      const auto c = classify(g);
      EXPECT_EQ(c.dendric, c.acyclic && c.connected);
      if (c.acyclic && c.sign == Sign::neutral) EXPECT_TRUE(c.dendric);
      if (c.connected && c.sign == Sign::neutral) EXPECT_TRUE(c.dendric);
      if (!c.bispecial) EXPECT_TRUE(c.dendric && c.multiplicity == 0);
      EXPECT_EQ(g.left.size(), left_degree(w, g.word));
    }
}

TEST_P(Matrix, CassaigneAndThresholds) {
  EXPECT_TRUE(check_cassaigne_identities(win()).holds());
  EXPECT_TRUE(thresholds(win()).ordered());
}

TEST_P(Matrix, NeutralComplexity) {
  const auto& w = win();
  const auto t = thresholds(w);
  if (t.neutral.value != 0 || !t.neutral.certified) GTEST_SKIP() << "not neutral";
  const std::size_t k = w.alphabet().size();
  for (std::size_t n = 0; n <= w.max_len(); ++n) EXPECT_EQ(w.count(n), (k - 1) * n + 1);
}

TEST_P(Matrix, FullLevelsGiveTightCodeBounds) {
  const auto& w = win();
  const auto t = thresholds(w);
  const auto prof = complexity_profile(w);
  for (std::size_t k = t.neutral.value; k <= w.scan_depth(); ++k) {
    const auto r = check_suffix_code_bounds(w, w.level(k), k, k,
                                            BoundMode::strong_or_neutral);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.sum, prof.s[k]);
  }
}

TEST_P(Matrix, RandomCodesRespectBounds) {
  const auto& w = win();
  const auto t = thresholds(w);
  std::mt19937_64 rng(GetParam());
  for (BoundMode mode : {BoundMode::strong_or_neutral, BoundMode::weak_or_neutral}) {
    const auto& th = mode == BoundMode::weak_or_neutral ? t.weak_or_neutral : t.neutral;
    if (!th.certified || th.value + 3 > w.scan_depth()) continue;
    const std::size_t lo = th.value, hi = th.value + 3;
    for (auto side : {CodeSide::suffix, CodeSide::prefix})
      for (int i = 0; i < 10; ++i) {
        const auto code = random_maximal_code(w, lo, hi, 20, rng, side);
        const auto r = check_code_bounds(w, code, lo, hi, mode, side);
        EXPECT_TRUE(r.holds) << named().name << " sum " << r.sum;
      }
  }
}

TEST_P(Matrix, CoveringsSurjectOntoImage) {
  const auto& w = win();
  if (w.alphabet().size() < 2) GTEST_SKIP();
  std::mt19937_64 rng(GetParam() + 100);
  const Morphism sigma = random_ar_product(w.alphabet(), 3, rng);
  const auto img = apply_to_window(sigma, w, 8);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<Word> covered;
    for (const auto& c : enumerate_coverings(sigma, w, n)) {
      ASSERT_TRUE(w.contains(c.w));
      ASSERT_EQ(slice(sigma.apply(c.w), c.offset, n), c.covered);
      covered.insert(c.covered);
    }
    const auto level = img.level(n);
    EXPECT_EQ(covered, std::set<Word>(level.begin(), level.end()));
    EXPECT_EQ(covering_count(sigma, w, n), enumerate_coverings(sigma, w, n).size());
  }
}

TEST_P(Matrix, CoveringRecurrence) {
  const auto& w = win();
  if (w.alphabet().size() < 2) GTEST_SKIP();
  std::mt19937_64 rng(GetParam() + 200);
  const Morphism sigma = random_ar_product(w.alphabet(), 2, rng);
  const auto r = check_covering_recurrence(sigma, w, w.max_len() - 2);
  EXPECT_TRUE(r.holds()) << r.failure;
}

TEST_P(Matrix, DendricPreservedByArProducts) {
  const auto& w = win();
  if (!is_dendric_certified(w)) GTEST_SKIP() << "not dendric";
  std::mt19937_64 rng(GetParam() + 300);
  for (int i = 0; i < 5; ++i) {
    const Morphism sigma = random_ar_product(w.alphabet(), 1 + rng() % 4, rng);
    EXPECT_TRUE(is_dendric_certified(apply_to_window(sigma, w, 10))) << sigma.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Windows, Matrix, ::testing::Range<std::size_t>(0, 11), name_of);

TEST(Matrix, HasElevenWindows) { EXPECT_EQ(matrix().size(), 11u); }

TEST(VerifySuite, DeterministicAndPassing) {
  const auto a = run_verify_suite(8, 30, 5);
  const auto b = run_verify_suite(8, 30, 5);
  EXPECT_EQ(a.to_string(), b.to_string());
  EXPECT_TRUE(a.all_pass()) << a.to_string();
  EXPECT_EQ(a.checks.size(), 13u);
  EXPECT_THROW(run_verify_suite(4, 1, 1), PreconditionError);
}
