#include <random>

#include <benchmark/benchmark.h>

#include "altdimap/binfn.hpp"
#include "altdimap/catalog.hpp"
#include "altdimap/invariants.hpp"
#include "altdimap/minors.hpp"
#include "altdimap/plane.hpp"

using namespace altdimap;

static void BM_Enumerate(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_maps(n).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Transform(benchmark::State& state)
{
  const auto m = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::normal_distribution<double> nd;
  std::vector<Complex> v(std::size_t{1} << m);
  for (auto& x : v)
    x = {nd(rng), nd(rng)};
  const Complex w = omega_scalar();
  for (auto _ : state) {
    transform_in_place(v, m, w);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(v.size()));
}
BENCHMARK(BM_Transform)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_ReduceAll(benchmark::State& state)
{
  const Map g = posy(3, 0);
  for (auto _ : state)
    for (EdgeId e : g.edges())
      for (Mu mu : all_mu)
        benchmark::DoNotOptimize(reduce(g, e, mu));
}
BENCHMARK(BM_ReduceAll);

static void BM_TutteC(benchmark::State& state)
{
  const Map g = alt_c(plane_named(plane_suite_names().back()));
  for (auto _ : state)
    benchmark::DoNotOptimize(T_c(g, g.edges()));
}
BENCHMARK(BM_TutteC)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
