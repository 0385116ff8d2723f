#include <benchmark/benchmark.h>

#include "outerdraw/decomposition.hpp"
#include "outerdraw/generators.hpp"
#include "outerdraw/layout.hpp"
#include "outerdraw/validation.hpp"

using namespace outerdraw;

static void bm_draw_maximal(benchmark::State& st) {
    auto g = gen_random_maximal_outerplanar((int)st.range(0), 99);
    auto e = default_root_edge(g.graph);
    for (auto _ : st) benchmark::DoNotOptimize(draw_maximal(g, e));
    st.SetComplexityN(st.range(0));
}
BENCHMARK(bm_draw_maximal)->RangeMultiplier(10)->Range(100, 100000)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

static void bm_draw_bipartite(benchmark::State& st) {
    auto g = gen_random_bipartite_outerplanar((int)st.range(0), 99);
    for (auto _ : st) benchmark::DoNotOptimize(draw(g));
}
BENCHMARK(bm_draw_bipartite)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

static void bm_decompose(benchmark::State& st) {
    auto g = gen_random_maximal_outerplanar((int)st.range(0), 7);
    auto e = default_root_edge(g.graph);
    for (auto _ : st) benchmark::DoNotOptimize(chain_decompose(g, e));
}
BENCHMARK(bm_decompose)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMillisecond);

static void bm_find_crossings(benchmark::State& st) {
    auto g = gen_random_maximal_outerplanar((int)st.range(0), 3);
    auto d = draw_maximal(g, default_root_edge(g.graph));
    for (auto _ : st) benchmark::DoNotOptimize(find_crossings(d));
}
BENCHMARK(bm_find_crossings)->Arg(200)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

static void bm_edge_length_ratio(benchmark::State& st) {
    auto g = gen_random_maximal_outerplanar((int)st.range(0), 3);
    auto d = draw_maximal(g, default_root_edge(g.graph));
    for (auto _ : st) benchmark::DoNotOptimize(edge_length_ratio(d));
}
BENCHMARK(bm_edge_length_ratio)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
