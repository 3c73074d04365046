#include <benchmark/benchmark.h>

#include "liftable/analysis.hpp"

using namespace liftable;

static void BM_EnumerateSpherical(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_spherical(g));
}
BENCHMARK(BM_EnumerateSpherical)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_StabilizerBruteForce(benchmark::State& state) {
  const auto g = gamma_vector(make_hyperelliptic(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_bruteforce(g));
}
BENCHMARK(BM_StabilizerBruteForce)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_LiftableImages(benchmark::State& state) {
  const auto g = gamma_vector(make_balanced_superelliptic(3, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(liftable_images(g, LiftableOptions{0}));
}
BENCHMARK(BM_LiftableImages)->Arg(1)->Arg(2)->Arg(3);

static void BM_PermClosure(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<Permutation> gens{Permutation::from_cycles(k, {{1, 2}}), Permutation::parse("(1,2,3)", k)};
  std::vector<int> cycle(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cycle[static_cast<std::size_t>(i)] = i + 1;
  gens.push_back(Permutation::from_cycles(k, {cycle}));
  for (auto _ : state) benchmark::DoNotOptimize(perm_closure(gens, k));
}
BENCHMARK(BM_PermClosure)->Arg(6)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_SubgroupPresentation(benchmark::State& state) {
  const auto report = liftable_images(gamma_vector(parse_dataset("(6,0;(1,2),(1,2),(1,3),(2,3))")));
  for (auto _ : state) benchmark::DoNotOptimize(subgroup_presentation(4, report.h1));
}
BENCHMARK(BM_SubgroupPresentation);

static void BM_AnalyzeTableRows(benchmark::State& state) {
  const auto sets = table_genus3_datasets();
  for (auto _ : state)
    for (const auto& d : sets) benchmark::DoNotOptimize(analyze(d));
}
BENCHMARK(BM_AnalyzeTableRows)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((i * 7 + j * 13 + i * j) % 11) - 5;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_MAIN();
