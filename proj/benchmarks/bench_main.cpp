#include <benchmark/benchmark.h>

#include "indmatch/bounds.hpp"
#include "indmatch/generators.hpp"
#include "indmatch/oracle.hpp"
#include "indmatch/reduction.hpp"

using namespace indmatch;

namespace {

void BM_ReductionSubcubic(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    const Graph g = gen_random_subcubic(n, 3 * std::int64_t{n} / 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(find_induced_matching_subcubic(g).matching.size());
    state.SetComplexityN(n);
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ReductionSubcubic)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

void BM_ReductionCubic(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    const Graph g = gen_random_cubic(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(find_induced_matching_subcubic(g).matching.size());
    state.SetComplexityN(n);
}
BENCHMARK(BM_ReductionCubic)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    const Graph g = gen_random_bounded_degree(n, 2 * std::int64_t{n}, 6, 1);
    for (auto _ : state) benchmark::DoNotOptimize(greedy_induced_matching(g).size());
}
BENCHMARK(BM_Greedy)->RangeMultiplier(8)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_Girth6(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    const Graph g = gen_random_girth6(n, 4, 1);
    for (auto _ : state) benchmark::DoNotOptimize(girth6_induced_matching(g).size());
}
BENCHMARK(BM_Girth6)->RangeMultiplier(8)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_OracleExtremal(benchmark::State& state) {
    const Graph g = gen_extremal_cubic();
    for (auto _ : state) benchmark::DoNotOptimize(exact_strong_matching_number(g).value);
}
BENCHMARK(BM_OracleExtremal);

void BM_OracleRandomCubic(benchmark::State& state) {
    const Graph g = gen_random_cubic(static_cast<Vertex>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(exact_strong_matching_number(g).value);
}
BENCHMARK(BM_OracleRandomCubic)->DenseRange(20, 40, 10)->Unit(benchmark::kMillisecond);

void BM_CountInvariants(benchmark::State& state) {
    const Graph g = gen_random_subcubic(static_cast<Vertex>(state.range(0)), 3 * state.range(0) / 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(count_invariants(g).thm2_bound);
}
BENCHMARK(BM_CountInvariants)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
