#include <benchmark/benchmark.h>

#include "multirisk/datasets.hpp"
#include "multirisk/expansion.hpp"
#include "multirisk/rss.hpp"
#include "multirisk/simulate.hpp"

using namespace multirisk;

namespace {

void BM_FullExpansion(benchmark::State& state) {
    const ProbTable& m = bundled_example(3).table;
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_expansion(m));
    }
}
BENCHMARK(BM_FullExpansion);

void BM_RssApprox(benchmark::State& state) {
    const ProbTable& m = bundled_example(2).table;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rss_approx(m, 1000).n_star);
    }
}
BENCHMARK(BM_RssApprox);

void BM_SimulateFull(benchmark::State& state) {
    const ProbTable& m = bundled_example(2).table;
    SimConfig cfg;
    cfg.replicates = 1'000;
    cfg.seed = 1;
    cfg.workers = static_cast<unsigned>(state.range(0));
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_risk(m, ModelKind::Full, n, cfg).mean);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 1000);
}
BENCHMARK(BM_SimulateFull)->Args({1, 200})->Args({4, 200})->Args({8, 200})->Args({8, 1000});

void BM_SimulateSubmodelDiscard(benchmark::State& state) {
    const ProbTable& m = bundled_example(2).table;
    SimConfig cfg;
    cfg.replicates = 1'000;
    cfg.seed = 1;
    cfg.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_risk(m, ModelKind::Submodel, 50, cfg).mean);
    }
}
BENCHMARK(BM_SimulateSubmodelDiscard)->Arg(1)->Arg(8);

void BM_ExactRisk(benchmark::State& state) {
    const ProbTable m =
        ProbTable::validate({0.25, 0.25, 0.25, 0.25}, {{0, 1}, {2, 3}});
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            exact_risk(m, ModelKind::Submodel, n, DiscardPolicy::SubmodelGroups));
    }
}
BENCHMARK(BM_ExactRisk)->Arg(12)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
