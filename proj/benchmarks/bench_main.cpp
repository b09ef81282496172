#include <benchmark/benchmark.h>

#include "ratcat/csp.hpp"
#include "ratcat/lattice_paths.hpp"
#include "ratcat/parking.hpp"
#include "ratcat/q_analogs.hpp"
#include "ratcat/rational_nc.hpp"

using namespace ratcat;

static void BM_EnumeratePaths(benchmark::State& state) {
  const Slope s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_paths(s));
}
BENCHMARK(BM_EnumeratePaths)->Args({5, 8})->Args({7, 12})->Args({9, 13});

static void BM_EnumerateNc(benchmark::State& state) {
  const Slope s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nc(s));
}
BENCHMARK(BM_EnumerateNc)->Args({5, 8})->Args({7, 12})->Args({9, 13});

static void BM_MembershipReconstruction(benchmark::State& state) {
  const Slope s(5, 8);
  const auto all = enumerate_noncrossing(7);
  for (auto _ : state)
    for (const auto& p : all) benchmark::DoNotOptimize(is_member_reconstruction(p, s));
}
BENCHMARK(BM_MembershipReconstruction);

static void BM_CspCatalan(benchmark::State& state) {
  const auto inst = catalan_instance(Slope(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(csp_verify(inst));
}
BENCHMARK(BM_CspCatalan)->Args({5, 8})->Args({7, 10});

static void BM_QCatalan(benchmark::State& state) {
  const Slope s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(q_catalan(s));
}
BENCHMARK(BM_QCatalan)->Args({5, 8})->Args({11, 13})->Args({17, 30});

static void BM_EnumeratePark(benchmark::State& state) {
  const Slope s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_park(s));
}
BENCHMARK(BM_EnumeratePark)->Args({3, 5})->Args({4, 7});
BENCHMARK_MAIN();
