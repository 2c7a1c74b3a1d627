#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "dendric/error.hpp"
#include "dendric/morphism.hpp"
#include "dendric/source.hpp"
#include "oracle.hpp"

using namespace dendric;

TEST(Source, Periodic) {
  const auto win = window_from_source("periodic:001", 5);
  EXPECT_EQ(win.alphabet().names(), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(oracle::level(win, 2), (std::set<std::string>{"00", "01", "10"}));
  const auto two = window_from_source("periodic:01.10", 3);
  EXPECT_EQ(oracle::level(two, 2), (std::set<std::string>{"01", "10", "11"}));
}

TEST(Source, Substitutive) {
  const auto win = window_from_source("substitutive:a->ab;b->a@a", 8);
  EXPECT_TRUE(win.same_language(
      window_from_substitutive(Morphism::parse("a->ab;b->a"), 0, 8)));
  EXPECT_THROW(window_from_source("substitutive:a->ab;b->a", 8), ParseError);
  EXPECT_THROW(window_from_source("substitutive:a->ab;b->a@c", 8), ParseError);
}

TEST(Source, Exchange) {
  const auto win = window_from_source("iet:orders: a<b | b<a ; lengths: a=2-r2, b=-1+r2", 10);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(win.count(n), n + 1);
}

TEST(Source, FileAndTruncate) {
  const auto path = std::filesystem::temp_directory_path() / "dendric_source_test.txt";
  const auto win = window_from_source("substitutive:a->ab;b->ac;c->a@a", 9);
  {
    std::ofstream out(path);
    out << format_window(win);
  }
  const auto same = window_from_source("file:" + path.string(), std::nullopt);
  EXPECT_TRUE(same.same_language(win));
  const auto cut = window_from_source("file:" + path.string(), 4);
  EXPECT_EQ(cut.max_len(), 4u);
  EXPECT_TRUE(cut.same_language(truncate(win, 4)));
  EXPECT_THROW(window_from_source("file:" + path.string(), 12), PreconditionError);
  std::filesystem::remove(path);
  EXPECT_THROW(window_from_source("file:" + path.string(), 4), PreconditionError);
}

TEST(Source, Errors) {
  EXPECT_THROW(window_from_source("periodic", 4), ParseError);
  EXPECT_THROW(window_from_source("sturmian:x", 4), ParseError);
  EXPECT_THROW(window_from_source("periodic:001", std::nullopt), PreconditionError);
  EXPECT_THROW(window_from_source("periodic:.01", 4), ParseError);
}
