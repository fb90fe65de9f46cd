#include <benchmark/benchmark.h>

#include "hunters/generators.hpp"
#include "hunters/kernel.hpp"
#include "hunters/solver.hpp"
#include "hunters/tree.hpp"

using namespace hunters;

static void BM_HunterNumberGrid(benchmark::State& state) {
    Graph g = grid_graph(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hunter_number(g, g.all()).value);
}
BENCHMARK(BM_HunterNumberGrid)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_MonotoneRandom(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Graph g = random_instance(RandomKind::connected, n, seed++);
        benchmark::DoNotOptimize(monotone_hunter_number(g, g.all()).value);
    }
}
BENCHMARK(BM_MonotoneRandom)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_TreeLabels(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph t = random_instance(RandomKind::tree, n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(tree_mh(t));
    state.SetComplexityN(n);
}
BENCHMARK(BM_TreeLabels)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_TreeStrategy(benchmark::State& state) {
    Graph t = random_instance(RandomKind::tree, static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(tree_monotone_strategy(t).length());
}
BENCHMARK(BM_TreeStrategy)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_ReplayT26(benchmark::State& state) {
    auto f = gen_T(2, 6);
    for (auto _ : state) benchmark::DoNotOptimize(is_winning(f.graph, f.start(), *f.strategy));
}
BENCHMARK(BM_ReplayT26)->Unit(benchmark::kMillisecond);

static void BM_Kernelize(benchmark::State& state) {
    Graph g = star_graph(static_cast<int>(state.range(0)));
    auto u = vertex_cover(g, CoverMode::approx2);
    for (auto _ : state) benchmark::DoNotOptimize(kernelize(g, 2, u).removed);
}
BENCHMARK(BM_Kernelize)->Arg(100)->Arg(1000);
BENCHMARK_MAIN();
