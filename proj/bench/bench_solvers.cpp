// Serial vs OpenMP exhaustive search, and branch and bound, on seeded G(n,p)
// instances. Arguments: n, k.

#include <benchmark/benchmark.h>

#include "kvcut/generate.hpp"
#include "kvcut/solvers.hpp"

namespace {

kvcut::Graph instance(std::int64_t n) {
    return kvcut::generate(kvcut::GraphKind::gnp, {.n = static_cast<std::size_t>(n), .p = 0.25}, 42);
}

void run_brute(benchmark::State& state, bool parallel) {
    const kvcut::Graph g = instance(state.range(0));
    kvcut::SolveConfig cfg = kvcut::SolveConfig::with_budget(static_cast<std::size_t>(state.range(1)));
    cfg.parallel = parallel;
    for (auto _ : state) benchmark::DoNotOptimize(kvcut::brute_force_kvcp(g, cfg).component_count);
}

void BM_BruteSerial(benchmark::State& state) { run_brute(state, false); }
void BM_BruteParallel(benchmark::State& state) { run_brute(state, true); }

void BM_BranchAndBound(benchmark::State& state) {
    const kvcut::Graph g = instance(state.range(0));
    const kvcut::SolveConfig cfg = kvcut::SolveConfig::with_budget(static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(kvcut::branch_and_bound_kvcp(g, cfg).component_count);
}

void sizes(benchmark::internal::Benchmark* b) {
    for (std::int64_t n : {16, 20, 24}) b->Args({n, 3})->Args({n, 5});
    b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_BruteSerial)->Apply(sizes);
BENCHMARK(BM_BruteParallel)->Apply(sizes);
BENCHMARK(BM_BranchAndBound)->Apply(sizes);

BENCHMARK_MAIN();
