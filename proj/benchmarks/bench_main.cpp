#include <benchmark/benchmark.h>

#include "hdecomp/canonical.hpp"
#include "hdecomp/embedding.hpp"
#include "hdecomp/enumerate.hpp"
#include "hdecomp/extremal.hpp"
#include "hdecomp/family.hpp"
#include "hdecomp/generators.hpp"
#include "hdecomp/packing.hpp"
#include "hdecomp/pipeline.hpp"

using namespace hdecomp;

static void BM_CanonicalRandom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_graph(n, 0.5, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g));
    }
}
BENCHMARK(BM_CanonicalRandom)->Arg(8)->Arg(12)->Arg(16);

// vertex-transitive: refinement does nothing, individualization does the work
static void BM_CanonicalTuran(benchmark::State& state) {
    const Graph g = turan_graph(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g));
    }
}
BENCHMARK(BM_CanonicalTuran)->Arg(9)->Arg(15);

static void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_graph(n, [&](const Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_TriangleEmbeddings(benchmark::State& state) {
    const Graph host = random_graph(static_cast<int>(state.range(0)), 0.5, 3);
    const Graph k3 = complete_graph(3);
    Limits wide;
    wide.embedding_vertices = Limits::kMaxSearchVertices;
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_embedding(
            k3, host, {},
            [&](std::span<const Vertex>) {
                ++count;
                return true;
            },
            nullptr, wide);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_TriangleEmbeddings)->Arg(16)->Arg(32)->Arg(64);

static void BM_MaxPacking(benchmark::State& state) {
    const Graph g = complete_graph(static_cast<int>(state.range(0)));
    const Graph k3 = complete_graph(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_packing(g, k3));
    }
}
BENCHMARK(BM_MaxPacking)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_PhiScan(benchmark::State& state) {
    const Graph k3 = complete_graph(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_max_over_n(static_cast<int>(state.range(0)), k3));
    }
}
BENCHMARK(BM_PhiScan)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ExC4(benchmark::State& state) {
    const GraphFamily c4({cycle_graph(4)}, true, "c4");
    for (auto _ : state) {
        benchmark::DoNotOptimize(extremal_number(static_cast<int>(state.range(0)), c4));
    }
}
BENCHMARK(BM_ExC4)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.6, 11);
    const Graph k3 = complete_graph(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(g, k3));
    }
}
BENCHMARK(BM_Decompose)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
