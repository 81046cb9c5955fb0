// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "bvpg/recognizer.hpp"
#include "bvpg/verifier.hpp"
#include "../tests/support.hpp"

using namespace bvpg;

namespace {

struct Sample {
    Graph g;
    GridRepresentation rep;
};

const Sample& sample(int n) {
    static std::map<int, Sample> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (;;) {
        Graph g = testing::random_block_graph(rng, n, {0, 0, 4, 2, 1});
        auto r = recognize(g);
        if (auto* a = std::get_if<Accepted>(&r)) return cache[n] = {g, a->representation};
    }
}

void BM_verify(benchmark::State& state) {
    const auto& s = sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_representation(s.g, s.rep));
}

void BM_verify_serial(benchmark::State& state) {
    const auto& s = sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_representation_serial(s.g, s.rep));
}

// One seven-vertex block graph, the largest size the oracle accepts.
const Graph& oracle_input() {
    static const Graph g = testing::connected_block_graphs(7).back();
    return g;
}

void BM_oracle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_b0vpg(oracle_input()));
}

void BM_oracle_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_b0vpg_serial(oracle_input()));
}

}  // namespace

BENCHMARK(BM_verify)->Arg(200)->Arg(1000);
BENCHMARK(BM_verify_serial)->Arg(200)->Arg(1000);
BENCHMARK(BM_oracle)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
