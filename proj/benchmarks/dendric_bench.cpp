#include <benchmark/benchmark.h>

#include <random>

#include "dendric/ar_decompose.hpp"
#include "dendric/complexity.hpp"
#include "dendric/coverings.hpp"
#include "dendric/exact_real.hpp"
#include "dendric/extension.hpp"
#include "dendric/iet.hpp"
#include "dendric/verify.hpp"

using namespace dendric;

static void BM_SubstitutiveWindow(benchmark::State& state) {
  const Morphism trib = Morphism::parse("a->ab;b->ac;c->a");
  for (auto _ : state)
    benchmark::DoNotOptimize(window_from_substitutive(trib, 0, state.range(0)));
}
BENCHMARK(BM_SubstitutiveWindow)->Arg(16)->Arg(64)->Arg(256);

static void BM_Thresholds(benchmark::State& state) {
  const auto win = window_from_substitutive(Morphism::parse("a->ab;b->ac;c->a"), 0,
                                            state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thresholds(win));
}
BENCHMARK(BM_Thresholds)->Arg(16)->Arg(64);

static void BM_CoveringCount(benchmark::State& state) {
  const Morphism fib = Morphism::parse("a->ab;b->a");
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto win = window_from_substitutive(fib, 0, n + 2);
  for (auto _ : state) benchmark::DoNotOptimize(covering_count(fib, win, n));
}
BENCHMARK(BM_CoveringCount)->Arg(50)->Arg(200);

static void BM_Decompose(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Morphism m =
      random_ar_product(Alphabet::from_chars("abcd"), state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(12);

static void BM_ExactSign(benchmark::State& state) {
  const ExactReal x = ExactReal::parse("1-r2+r3-r5");
  Integer p = 1, q = 1;
  for (int i = 0; i < 60; ++i) {
    Integer np = p + 2 * q;
    q = p + q;
    p = np;
  }
  const ExactReal close = ExactReal::surd(0) - Rational(p, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x.sign());
    benchmark::DoNotOptimize(close.sign());
  }
}
BENCHMARK(BM_ExactSign);

static void BM_NaturalCoding(benchmark::State& state) {
  const IntervalExchange t = sample_riet(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(natural_coding(t, ExactReal(), state.range(0)));
}
BENCHMARK(BM_NaturalCoding)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
