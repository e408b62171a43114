#include <benchmark/benchmark.h>

#include "sptough/enumerate.hpp"
#include "sptough/parser.hpp"
#include "sptough/sp_tree.hpp"

using namespace sptough;

// ==================== TREE UNIVERSE ====================

static void bm_enumerate_full(benchmark::State& state) {
    enumeration_config config;
    config.max_leaves = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        for_each_tree(config, [&](const sp_tree&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(bm_enumerate_full)->DenseRange(4, 9, 1);

static void bm_enumerate_simple(benchmark::State& state) {
    enumeration_config config;
    config.max_leaves = static_cast<int>(state.range(0));
    config.simple_only = true;
    for (auto _ : state) {
        long long count = 0;
        for_each_tree(config, [&](const sp_tree&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(bm_enumerate_simple)->DenseRange(4, 9, 1);

// ==================== FINGERPRINTS AND REALIZATION ====================

static void bm_encode_universe(benchmark::State& state) {
    enumeration_config config;
    config.max_leaves = static_cast<int>(state.range(0));
    std::vector<sp_tree> trees = enum_trees(config);
    for (auto _ : state) {
        std::size_t total = 0;
        for (const sp_tree& t : trees) total += encode(t).size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_encode_universe)->DenseRange(5, 8, 1);

static void bm_realize_universe(benchmark::State& state) {
    enumeration_config config;
    config.max_leaves = static_cast<int>(state.range(0));
    std::vector<sp_tree> trees = enum_trees(config);
    for (auto _ : state) {
        std::size_t total = 0;
        for (const sp_tree& t : trees) total += realize(t).graph.vertex_count();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_realize_universe)->DenseRange(5, 8, 1);

static void bm_parse_serialize(benchmark::State& state) {
    enumeration_config config;
    config.max_leaves = 8;
    std::vector<std::string> exprs;
    for (const sp_tree& t : enum_trees(config)) exprs.push_back(serialize(t));
    for (auto _ : state) {
        std::size_t total = 0;
        for (const std::string& e : exprs) total += serialize(parse(e)).size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_parse_serialize);

BENCHMARK_MAIN();
