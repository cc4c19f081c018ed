#include <benchmark/benchmark.h>

#include <random>

#include "dinrep/analysis.hpp"
#include "dinrep/construct.hpp"
#include "dinrep/matching.hpp"
#include "dinrep/representation.hpp"

using namespace dinrep;

namespace {

// Hamiltonian path plus forward skip arcs, rejecting triangles; the family
// the exact pipeline handles, at growing sizes.
Digraph sized_instance(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    auto link = [&](int u, int v) {
        arcs.emplace_back(u, v);
        adjacent[u][v] = adjacent[v][u] = true;
    };
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (coin(rng) > 0.25) continue;
            bool triangle = false;
            for (int w = 0; w < n && !triangle; ++w) {
                if (adjacent[i][w] && adjacent[j][w]) triangle = true;
            }
            if (!triangle) link(i, j);
        }
    }
    return Digraph(n, arcs);
}

void BM_BMatching(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Digraph d = sized_instance(n, 42);
    Graph g = underlying_graph(d);
    std::vector<int> b(n);
    for (int v = 0; v < n; ++v) b[v] = (v * 7) % 5;
    VertexFunction capacity(b);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_weight_b_matching(g, capacity).weight());
    }
}
BENCHMARK(BM_BMatching)->Arg(8)->Arg(16)->Arg(32);

void BM_DinPipeline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Digraph d = sized_instance(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(din_hamiltonian_triangle_free(d).value);
    }
}
BENCHMARK(BM_DinPipeline)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_VerifyDin(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Digraph d = sized_instance(n, 7);
    Representation rep = din_hamiltonian_triangle_free(d).representation;
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_din(d, rep).has_value());
    }
}
BENCHMARK(BM_VerifyDin)->Arg(12)->Arg(24);

void BM_ConstructWdin(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Digraph d = sized_instance(n, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct_wdin(d).universe_size());
    }
}
BENCHMARK(BM_ConstructWdin)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
