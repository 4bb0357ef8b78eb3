#include <benchmark/benchmark.h>

#include "gradalg/algebra.hpp"
#include "gradalg/corpus.hpp"
#include "gradalg/homology.hpp"
#include "gradalg/lie.hpp"
#include "gradalg/matroid.hpp"
#include "gradalg/series.hpp"

using namespace gradalg;

namespace {

void BM_HilbertFreeMonomial(benchmark::State& state) {
  const Presentation p = parse_presentation(corpus_text("ex5.alg"));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(p, N));
}
BENCHMARK(BM_HilbertFreeMonomial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BarTor(benchmark::State& state) {
  const Presentation p = parse_presentation(corpus_text("ex9.alg"));
  const int J = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bar_tor_dims(p, J));
}
BENCHMARK(BM_BarTor)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_LieDimsAnick(benchmark::State& state) {
  const LiePresentation l = parse_lie_presentation(corpus_text("anick.lie"));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lie_dims(l, N));
}
BENCHMARK(BM_LieDimsAnick)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_LieDimsSl3(benchmark::State& state) {
  const LiePresentation l = parse_lie_presentation(corpus_text("sl3.lie"));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lie_dims(l, N));
}
BENCHMARK(BM_LieDimsSl3)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Decomposable(benchmark::State& state) {
  const TwoFlatFamily k4 = graph_two_flats(parse_graph(corpus_text("k4.graph")));
  for (auto _ : state) benchmark::DoNotOptimize(is_decomposable(k4));
}
BENCHMARK(BM_Decomposable)->Unit(benchmark::kMillisecond);

void BM_LoggEven(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
  Rational pow(1);
  for (auto& x : c) {
    x = pow;
    pow *= 3;
  }
  const SignedSeries v{TruncSeries(c)};
  for (auto _ : state) benchmark::DoNotOptimize(logg(v, LoggMode::Even));
}
BENCHMARK(BM_LoggEven)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
