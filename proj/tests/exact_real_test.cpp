#include <gtest/gtest.h>

#include <random>

#include "dendric/exact_real.hpp"
#include "oracle.hpp"

using namespace dendric;

namespace {

ExactReal random_real(std::mt19937_64& rng, std::size_t dims, int scale) {
  std::uniform_int_distribution<int> num(-scale, scale), den(1, scale);
  ExactReal x = Rational(num(rng), den(rng));
  for (std::size_t i = 0; i < dims; ++i)
    x += ExactReal::surd(i, Rational(num(rng), den(rng)));
  return x;
}

}  // namespace

TEST(ExactReal, ParseAndFormat) {
  EXPECT_EQ(ExactReal::parse("1/4 + 1/8r2 - r3").to_string(), "1/4+1/8r2-r3");
  EXPECT_EQ(ExactReal::parse("-r3+2").to_string(), "2-r3");
  EXPECT_EQ(ExactReal::parse("2*r5 - r5 - r5").to_string(), "0");
  EXPECT_EQ(ExactReal::parse("3/6").coord(0), Rational(1, 2));
  EXPECT_EQ(ExactReal::parse("r2").coord(1), 1);
  EXPECT_TRUE(ExactReal::parse("7/3").is_rational());
  EXPECT_THROW(ExactReal::parse("r4"), ParseError);
  EXPECT_THROW(ExactReal::parse("1/0"), ParseError);
  EXPECT_THROW(ExactReal::parse("1 +"), ParseError);
  try {
    ExactReal::parse("1/2+x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(ExactReal, Comparisons) {
  const ExactReal half = Rational(1, 2);
  const ExactReal half_r2 = ExactReal::surd(0, Rational(1, 2));
  EXPECT_EQ(exact_cmp(half, half_r2), std::strong_ordering::less);
  EXPECT_EQ(exact_cmp(half_r2, half_r2), std::strong_ordering::equal);
  const ExactReal x = ExactReal::parse("1-r2+r3-r5");
  EXPECT_EQ(x.sign(), -1);
  EXPECT_LT(x, ExactReal());
  EXPECT_NEAR(x.to_double(), -0.918230732304007, 1e-12);
  EXPECT_EQ(oracle::value(x).str(40).substr(0, 20), "-0.91823073230400745");
}

TEST(ExactReal, TinyDifferencesAreResolved) {
  // 1393/985 approximates √2 from below, 3363/2378 from above.
  EXPECT_EQ((ExactReal::surd(0) - Rational(1393, 985)).sign(), 1);
  EXPECT_EQ((ExactReal::surd(0) - Rational(3363, 2378)).sign(), -1);
  // A convergent of √2 with a 60-digit denominator: beyond double precision.
  Integer p = 1, q = 1;
  for (int i = 0; i < 100; ++i) {
    Integer np = p + 2 * q, nq = p + q;
    p = np;
    q = nq;
  }
  const ExactReal d = ExactReal::surd(0) - Rational(p, q);
  const int expect = (p * p - 2 * q * q) > 0 ? -1 : 1;
  EXPECT_EQ(d.sign(), expect);
}

TEST(ExactReal, SignMatchesDecimalOracle) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 400; ++t) {
    const ExactReal x = random_real(rng, 1 + t % 8, 50);
    const auto v = oracle::value(x);
    const int expect = v > 0 ? 1 : (v < 0 ? -1 : 0);
    EXPECT_EQ(x.sign(), expect) << x.to_string();
  }
}

TEST(ExactReal, FieldLaws) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const ExactReal a = random_real(rng, 4, 20), b = random_real(rng, 4, 20),
                    c = random_real(rng, 4, 20);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * Rational(3, 7)) / Rational(3, 7), a);
    EXPECT_EQ(-(-a), a);
    const auto ab = exact_cmp(a, b);
    EXPECT_EQ(exact_cmp(b, a), 0 <=> ab);
    if (ab < 0 && exact_cmp(b, c) < 0) {
      EXPECT_TRUE(exact_cmp(a, c) < 0);
    }
    EXPECT_EQ(ExactReal::parse(a.to_string()), a);
  }
}

TEST(ExactReal, RationalRank) {
  const std::vector<ExactReal> dependent{ExactReal::parse("1+r2"), ExactReal::parse("2+2r2"),
                                         ExactReal::parse("r3")};
  EXPECT_EQ(rational_rank(dependent), 2u);
  const std::vector<ExactReal> independent{ExactReal::parse("2-r2"),
                                           ExactReal::parse("-1+r2")};
  EXPECT_EQ(rational_rank(independent), 2u);
  const std::vector<ExactReal> rationals{Rational(1, 3), Rational(2, 3)};
  EXPECT_EQ(rational_rank(rationals), 1u);
}

TEST(ExactReal, BasisBounds) {
  EXPECT_EQ(surd_basis_size(), 8u);
  EXPECT_EQ(surd_prime(0), 2u);
  EXPECT_EQ(surd_prime(7), 19u);
  EXPECT_THROW(ExactReal::surd(8), PreconditionError);
}

TEST(ExactReal, Overflow) {
  ExactReal x = Rational(1, 3);
  EXPECT_THROW(
      {
        for (int i = 0; i < 20000; ++i) x *= Rational(Integer(1) << 16, 3);
      },
      FieldOverflowError);
}
