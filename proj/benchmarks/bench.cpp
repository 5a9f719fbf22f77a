#include <benchmark/benchmark.h>

#include "qaw/prng.hpp"
#include "qaw/structrel.hpp"

using namespace qaw;

namespace {

const QParam kHalf{Rational(1, 2)};

XPoly dense_poly(int degree) {
  SplitMix64 rng(1234);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(rng.rational());
  return XPoly(std::move(c));
}

void bm_dq(benchmark::State& state) {
  const XPoly p = dense_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dq(p, kHalf));
}
BENCHMARK(bm_dq)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void bm_sq(benchmark::State& state) {
  const XPoly p = dense_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sq(p, kHalf));
}
BENCHMARK(bm_sq)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void bm_pearson_recurrence(benchmark::State& state) {
  const PearsonPair pp(XPoly({Rational(-3, 8), Rational(0), Rational(3, 4)}),
                       XPoly::monomial(1));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int n = 0; n <= N; ++n) benchmark::DoNotOptimize(pearson_recurrence(pp, kHalf, n));
}
BENCHMARK(bm_pearson_recurrence)->Arg(8)->Arg(16)->Arg(32);

void bm_moments(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const CorollaryFamily fam =
      corollary_family(Rational(1, 2), Rational(-1, 2), kHalf, 1, M + 2);
  for (auto _ : state) benchmark::DoNotOptimize(moments(fam.rec, M));
}
BENCHMARK(bm_moments)->Arg(8)->Arg(16)->Arg(24);

void bm_fit_structure(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const CorollaryFamily fam =
      corollary_family(Rational(1, 2), Rational(-1, 2), kHalf, 1, N + 4);
  const MonicOPS ops = generate_ops(fam.rec, N + 1);
  for (auto _ : state) benchmark::DoNotOptimize(fit_structure(ops, kHalf, N));
}
BENCHMARK(bm_fit_structure)->Arg(3)->Arg(8);

void bm_solve_quartic(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_quartic(Rational(-5, 3), Rational(-59, 3), Rational(-20, 3),
                                           kHalf, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(bm_solve_quartic)->Arg(128)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
