#include <benchmark/benchmark.h>

#include <random>

#include "manin/fixtures.hpp"
#include "manin/products.hpp"

namespace {

using namespace manin;

void BM_WhiteLiePerm(benchmark::State& state) {
  const auto lie = fixtures::load("lie"), perm = fixtures::load("perm");
  for (auto _ : state) benchmark::DoNotOptimize(white(lie, perm));
}
BENCHMARK(BM_WhiteLiePerm);

void BM_WhitePreLieAs(benchmark::State& state) {
  const auto prelie = fixtures::load("prelie"), as = fixtures::load("as");
  for (auto _ : state) benchmark::DoNotOptimize(white(prelie, as));
}
BENCHMARK(BM_WhitePreLieAs);

void BM_WhiteRoute(benchmark::State& state) {
  const auto perm = fixtures::load("perm"), leib = fixtures::load("leib");
  for (auto _ : state) {
    if (state.range(0) == 0) {
      benchmark::DoNotOptimize(white_relations_by_intersection(perm, leib));
    } else {
      benchmark::DoNotOptimize(white_relations_by_kernel(perm, leib));
    }
  }
  state.SetLabel(state.range(0) == 0 ? "intersection" : "kernel");
}
BENCHMARK(BM_WhiteRoute)->Arg(0)->Arg(1);

void BM_BlackPreLieAs(benchmark::State& state) {
  const auto prelie = fixtures::load("prelie"), as = fixtures::load("as");
  for (auto _ : state) benchmark::DoNotOptimize(black(prelie, as));
}
BENCHMARK(BM_BlackPreLieAs);

void BM_KoszulDual(benchmark::State& state) {
  const auto p = white(fixtures::load("prelie"), fixtures::load("as"));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_dual(p));
}
BENCHMARK(BM_KoszulDual);

void BM_Echelonize(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const std::size_t d = 144;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2), coin(0, 9);
  std::vector<IntVector> m(rows, IntVector(d));
  for (auto& r : m)
    for (auto& x : r) x = coin(rng) == 0 ? entry(rng) : 0;
  for (auto _ : state) benchmark::DoNotOptimize(echelonize(m, d));
}
BENCHMARK(BM_Echelonize)->Arg(48)->Arg(108)->Arg(180);

}  // namespace

BENCHMARK_MAIN();
