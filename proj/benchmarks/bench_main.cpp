#include <benchmark/benchmark.h>

#include "cblocks/cblocks.hpp"

using namespace cblocks;

namespace {

void BM_RankColdMemo(benchmark::State& state) {
  const WeightVector wv({5, 4, 3, 2, 1, 1});
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_rank_memo();
    benchmark::DoNotOptimize(rank(wv, level));
  }
}
BENCHMARK(BM_RankColdMemo)->Arg(7)->Arg(10);

void BM_RankWarmMemo(benchmark::State& state) {
  const WeightVector wv({5, 4, 3, 2, 1, 1});
  rank(wv, 10);
  for (auto _ : state) benchmark::DoNotOptimize(rank(wv, 10));
}
BENCHMARK(BM_RankWarmMemo);

void BM_IntersectionVector(benchmark::State& state) {
  const BundleSpec bundle =
      make_bundle(Family::Spc, static_cast<int>(state.range(0)), {5, 4, 3, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(intersection_vector(bundle));
}
BENCHMARK(BM_IntersectionVector)->Arg(5)->Arg(8);

void BM_DivisorClassSolve(benchmark::State& state) {
  const BundleSpec bundle = make_bundle(Family::Spc, 5, {5, 4, 3, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(divisor_class(bundle));
}
BENCHMARK(BM_DivisorClassSolve);

void BM_EnumerateFCurves(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fcurves(n));
}
BENCHMARK(BM_EnumerateFCurves)->Arg(6)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
