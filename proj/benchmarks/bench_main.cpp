#include <benchmark/benchmark.h>

#include "bsym/birkhoff.hpp"
#include "bsym/comb_sym.hpp"
#include "bsym/gamma.hpp"
#include "bsym/groups.hpp"
#include "bsym/hull.hpp"
#include "bsym/rep_poly.hpp"
#include "bsym/subgroups.hpp"

using namespace bsym;

static void BM_BirkhoffHull(benchmark::State& state) {
  const auto pts = birkhoff_vertex_vectors(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(facet_enumeration(pts));
}
BENCHMARK(BM_BirkhoffHull)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BirkhoffAutomorphisms(benchmark::State& state) {
  const auto inc = birkhoff_incidence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(comb_automorphisms(inc));
}
BENCHMARK(BM_BirkhoffAutomorphisms)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_RegularPairs(benchmark::State& state) {
  const auto g = symmetric_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(commuting_regular_pairs(g));
}
BENCHMARK(BM_RegularPairs)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_AllSubgroupsS5(benchmark::State& state) {
  const auto g = symmetric_group(5);
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g));
}
BENCHMARK(BM_AllSubgroupsS5)->Unit(benchmark::kMillisecond);

// Combinatorial automorphism group has order 82944 here.
static void BM_GammaActsA4(benchmark::State& state) {
  const auto m = permutation_matrix_group(alternating_group(4));
  for (auto _ : state) benchmark::DoNotOptimize(verify_gamma_acts(m));
}
BENCHMARK(BM_GammaActsA4)->Iterations(1)->Unit(benchmark::kSecond);
BENCHMARK_MAIN();
