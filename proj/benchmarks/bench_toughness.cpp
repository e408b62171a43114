#include <benchmark/benchmark.h>

#include "sptough/multigraph.hpp"
#include "sptough/structure.hpp"
#include "sptough/toughness.hpp"

using namespace sptough;

// ==================== EXACT ORACLE ====================

static void bm_toughness_path(benchmark::State& state) {
    multigraph g = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(toughness(g));
}
BENCHMARK(bm_toughness_path)->DenseRange(8, 20, 4);

static void bm_toughness_cycle(benchmark::State& state) {
    multigraph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(toughness(g));
}
BENCHMARK(bm_toughness_cycle)->DenseRange(8, 20, 4);

static void bm_toughness_bipartite(benchmark::State& state) {
    multigraph g = complete_bipartite_graph(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(toughness(g));
}
BENCHMARK(bm_toughness_bipartite)->DenseRange(4, 16, 4);

static void bm_minimality_cycle(benchmark::State& state) {
    multigraph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_minimally_tough(g));
}
BENCHMARK(bm_minimality_cycle)->DenseRange(6, 12, 2);

// ==================== STRUCTURAL CLASSIFIER ====================

static void bm_classify_cycle(benchmark::State& state) {
    multigraph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(bm_classify_cycle)->DenseRange(6, 18, 6);

BENCHMARK_MAIN();
