#include <benchmark/benchmark.h>

#include <random>

#include "tanglekit/braid_engine.hpp"
#include "tanglekit/braid_word.hpp"
#include "tanglekit/corpus.hpp"
#include "tanglekit/fox_coloring.hpp"
#include "tanglekit/jones.hpp"
#include "tanglekit/kei_presentation.hpp"
#include "tanglekit/smith_normal_form.hpp"
#include "tanglekit/tangle.hpp"

using namespace tanglekit;

static void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(42);
  IntMatrix m(n, std::vector<BigInt>(n));
  for (auto& row : m) {
    for (auto& x : row) x = static_cast<long long>(rng() % 21) - 10;
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_ColoringGroup(benchmark::State& state) {
  const auto d = find_builtin("9_40")->diagram;
  for (auto _ : state) benchmark::DoNotOptimize(col_group(d, 5));
}
BENCHMARK(BM_ColoringGroup);

static void BM_ToddCoxeter(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(b3_power_quotient(k).order());
}
BENCHMARK(BM_ToddCoxeter)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_ConjugacyCensus(benchmark::State& state) {
  const auto& g = coxeter_quotient();
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_census(g).class_count);
}
BENCHMARK(BM_ConjugacyCensus)->Unit(benchmark::kMillisecond);

static void BM_KeiEnumeration(benchmark::State& state) {
  const auto p = free_burnside_presentation(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(p).kei.size());
}
BENCHMARK(BM_KeiEnumeration)->Args({3, 3})->Args({4, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_BurnsideKei(benchmark::State& state) {
  const auto d = find_builtin("9_40")->diagram;
  for (auto _ : state) benchmark::DoNotOptimize(burnside_kei(d, 5).kei.size());
}
BENCHMARK(BM_BurnsideKei)->Unit(benchmark::kMillisecond);

static void BM_KauffmanBracket(benchmark::State& state) {
  const auto d = braid_closure(parse_braid("1 -2 1 -2 1 -2 1 -2 1 -2 1 -2 1 -2", 3).pow(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
}
BENCHMARK(BM_KauffmanBracket)->Arg(1);

static void BM_JonesCorpus(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& e : builtin_corpus()) benchmark::DoNotOptimize(jones_at_fifth_root(e.diagram));
  }
}
BENCHMARK(BM_JonesCorpus);

static void BM_TangleClosure(benchmark::State& state) {
  const auto t = parse_tangle("(comp 0 1 (tw 3 2 2) (comp 1 0 (tw -2 3) (comp 0 0 x+ (tw 2 2))))");
  for (auto _ : state) benchmark::DoNotOptimize(col_group(closure_diagram(t, ClosureKind::Numerator), 5));
}
BENCHMARK(BM_TangleClosure);
BENCHMARK_MAIN();
