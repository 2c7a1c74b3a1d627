#include <gtest/gtest.h>

#include "dendric/complexity.hpp"
#include "dendric/error.hpp"
#include "dendric/extension.hpp"
#include "dendric/morphism.hpp"
#include "oracle.hpp"

using namespace dendric;

namespace {

const Alphabet kBits = Alphabet::from_chars("01");

}  // namespace

TEST(Morphism, ParseAndPrint) {
  const Morphism m = Morphism::parse(" a -> ab ; b->a ");
  EXPECT_EQ(m.domain().names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(m.to_string(), "a->ab;b->a");
  EXPECT_EQ(m.width(), 2u);
  EXPECT_EQ(m.total_length(), 3u);
  EXPECT_TRUE(m.is_endomorphism());
  EXPECT_FALSE(m.is_coding());

  const Morphism g = Morphism::parse("a->xy;b->ay");
  EXPECT_EQ(g.codomain().names(), (std::vector<std::string>{"a", "x", "y"}));
  EXPECT_FALSE(g.is_endomorphism());
}

TEST(Morphism, ParseErrors) {
  EXPECT_THROW(Morphism::parse("a->"), ParseError);
  EXPECT_THROW(Morphism::parse("a>b"), ParseError);
  EXPECT_THROW(Morphism::parse("a->b;a->c"), ParseError);
  EXPECT_THROW(Morphism::parse(""), ParseError);
  try {
    Morphism::parse("a->ab;bb->a");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GT(e.column(), 6u);
  }
}

TEST(Morphism, ConstructorValidates) {
  EXPECT_THROW(Morphism(kBits, kBits, {Word{0}, Word{}}), PreconditionError);
  EXPECT_THROW(Morphism(kBits, kBits, {Word{0}, Word{0}}), PreconditionError);
  EXPECT_THROW(Morphism(kBits, kBits, {Word{0}}), PreconditionError);
  const auto m = Morphism::with_minimal_codomain(kBits, kBits, {Word{0, 0}, Word{0}});
  EXPECT_EQ(m.codomain().names(), (std::vector<std::string>{"0"}));
}

TEST(Morphism, ArnouxRauzyGenerators) {
  EXPECT_EQ(arnoux_rauzy(Side::L, 0, kBits).to_string(), "0->0;1->01");
  EXPECT_EQ(arnoux_rauzy(Side::R, 1, Alphabet::from_chars("abc")).to_string(),
            "a->ab;b->b;c->cb");
  const Alphabet one = Alphabet::from_chars("l");
  EXPECT_EQ(arnoux_rauzy(Side::R, 0, one), Morphism::identity(one));
  EXPECT_THROW(arnoux_rauzy(Side::L, 2, kBits), PreconditionError);
}

TEST(Morphism, Compose) {
  const auto l0 = arnoux_rauzy(Side::L, 0, kBits);
  const auto r1 = arnoux_rauzy(Side::R, 1, kBits);
  EXPECT_EQ(compose(l0, r1).to_string(), "0->001;1->01");
  EXPECT_EQ(compose(l0, l0).to_string(), "0->0;1->001");
  const Morphism s = Morphism::parse("0->01;1->0");
  EXPECT_EQ(compose(Morphism::identity(kBits), s), s);
  EXPECT_EQ(compose(s, Morphism::identity(kBits)), s);
  EXPECT_THROW(compose(s, Morphism::parse("a->ab;b->c")), PreconditionError);
}

TEST(Morphism, ComposeIsAssociative) {
  std::mt19937_64 rng(3);
  const Alphabet abc = Alphabet::from_chars("abc");
  for (int t = 0; t < 50; ++t) {
    std::vector<Morphism> ms;
    for (int i = 0; i < 3; ++i)
      ms.push_back(arnoux_rauzy(rng() % 2 ? Side::L : Side::R,
                                static_cast<Letter>(rng() % 3), abc));
    EXPECT_EQ(compose(compose(ms[0], ms[1]), ms[2]), compose(ms[0], compose(ms[1], ms[2])));
    const Word w = abc.parse("abcab");
    EXPECT_EQ(compose(ms[0], ms[1]).apply(w), ms[0].apply(ms[1].apply(w)));
  }
}

TEST(LimitWords, Generators) {
  EXPECT_EQ(limit_prefix(arnoux_rauzy(Side::L, 0, kBits)), kBits.parse("0"));
  EXPECT_EQ(limit_suffix(arnoux_rauzy(Side::L, 0, kBits)), Word{});
  EXPECT_EQ(limit_prefix(arnoux_rauzy(Side::R, 0, kBits)), Word{});
  EXPECT_EQ(limit_suffix(arnoux_rauzy(Side::R, 0, kBits)), kBits.parse("0"));
  const Morphism m = Morphism::parse("0->001;1->01");
  EXPECT_EQ(limit_prefix(m), kBits.parse("0"));
  EXPECT_EQ(limit_suffix(m), kBits.parse("01"));
}

TEST(LimitWords, PeriodicMorphism) {
  try {
    limit_prefix(Morphism::parse("0->00;1->0000"));
    FAIL();
  } catch (const PeriodicMorphismError& e) {
    EXPECT_EQ(e.root(), Word{0});
  }
  EXPECT_THROW(limit_suffix(Morphism::parse("a->abab;b->ab")), PeriodicMorphismError);
}

TEST(LimitWords, SuffixOfAbAndB) {
  const Morphism m = Morphism::parse("a->ab;b->b");
  EXPECT_EQ(limit_prefix(m), Word{});
  EXPECT_EQ(limit_suffix(m), m.codomain().parse("b"));
  EXPECT_TRUE(check_antecedent_uniqueness(m).unique());
}

TEST(Antecedents, LeftGenerator) {
  const auto r = check_antecedent_uniqueness(arnoux_rauzy(Side::L, 0, kBits));
  EXPECT_EQ(r.prefix, Word{0});
  EXPECT_EQ(r.prefix_antecedents[0], std::vector<Letter>{0});
  EXPECT_EQ(r.prefix_antecedents[1], std::vector<Letter>{1});
  EXPECT_TRUE(r.unique());
}

TEST(Antecedents, AmbiguousLetter) {
  // Both a and c start their image with b after the empty limit prefix.
  const auto r = check_antecedent_uniqueness(Morphism::parse("a->ba;b->ab;c->bb"));
  EXPECT_FALSE(r.unique());
  EXPECT_FALSE(r.ambiguous().empty());
}

TEST(ApplyToWindow, LeftGeneratorKeepsSturmian) {
  const auto fib = window_from_substitutive(Morphism::parse("0->01;1->0"), 0, 22);
  const auto img = apply_to_window(arnoux_rauzy(Side::L, 0, kBits), fib, 20);
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(img.count(n), n + 1);
  EXPECT_TRUE(is_dendric_certified(img));
}

TEST(ApplyToWindow, IdentityAndConstant) {
  const auto fib = window_from_substitutive(Morphism::parse("0->01;1->0"), 0, 12);
  const auto same = apply_to_window(Morphism::identity(kBits), fib, 10);
  for (std::size_t n = 0; n <= 10; ++n)
    EXPECT_EQ(oracle::level(same, n), oracle::level(fib, n));
  const auto zeros = apply_to_window(Morphism::parse("0->00;1->00"), fib, 10);
  EXPECT_EQ(zeros.alphabet().size(), 1u);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(zeros.count(n), 1u);
  EXPECT_THROW(apply_to_window(Morphism::identity(kBits), fib, 11), PreconditionError);
}

TEST(ApplyToWindow, MatchesImageOfSample) {
  const std::string x = oracle::iterate({{'a', "ab"}, {'b', "a"}}, "a", 18);
  const std::string y = oracle::iterate({{'a', "ab"}, {'b', "ba"}}, x, 1);
  const auto win = window_from_substitutive(Morphism::parse("a->ab;b->a"), 0, 14);
  const auto img = apply_to_window(Morphism::parse("a->ab;b->ba"), win, 12);
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(oracle::level(img, n), oracle::factors(y, n));
}

TEST(LimitWords, PrefixIsMaximalCommonPrefix) {
  std::mt19937_64 rng(17);
  const Alphabet ab = Alphabet::from_chars("ab");
  for (int t = 0; t < 300; ++t) {
    std::vector<Word> images(2);
    for (auto& img : images) {
      img.resize(1 + rng() % 5);
      for (auto& c : img) c = static_cast<Letter>(rng() % 2);
    }
    std::optional<Morphism> m;
    try {
      m = Morphism::with_minimal_codomain(ab, ab, images);
    } catch (const PreconditionError&) {
      continue;
    }
    Word p, s;
    try {
      p = limit_prefix(*m);
      s = limit_suffix(*m);
    } catch (const PeriodicMorphismError&) {
      continue;
    }
    // Compare against long powers of the images as strings.
    std::vector<std::string> powers;
    for (const auto& img : images) powers.push_back(oracle::repeat(ab.format(img), 40));
    std::size_t lcp = 0;
    while (lcp < powers[0].size() && powers[0][lcp] == powers[1][lcp]) ++lcp;
    EXPECT_EQ(ab.format(p), powers[0].substr(0, lcp)) << m->to_string();
    std::size_t lcs = 0;
    while (lcs < powers[0].size() &&
           powers[0][powers[0].size() - 1 - lcs] == powers[1][powers[1].size() - 1 - lcs])
      ++lcs;
    EXPECT_EQ(ab.format(s), powers[0].substr(powers[0].size() - lcs)) << m->to_string();
  }
}
