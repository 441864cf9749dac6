// Serial reference path (one worker) against the OpenMP path for the two
// data-parallel loops: suite evaluation and the remark search.

#include "rbc/borel_cantelli.hpp"
#include "rbc/harness.hpp"
#include "rbc/parallel.hpp"

#include <benchmark/benchmark.h>

namespace {

rbc::SuiteConfig bench_config() {
    rbc::SuiteConfig cfg;
    cfg.seed = 7;
    cfg.count = 500;
    cfg.checks = {rbc::Check::identity33, rbc::Check::bc, rbc::Check::bn, rbc::Check::bs, rbc::Check::proof_chain};
    return cfg;
}

void BM_SuiteSerial(benchmark::State& state) {
    const auto cfg = bench_config();
    for (auto _ : state) benchmark::DoNotOptimize(rbc::run_suite(cfg, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.count));
}

void BM_SuiteParallel(benchmark::State& state) {
    const auto cfg = bench_config();
    const unsigned workers = rbc::default_workers();
    for (auto _ : state) benchmark::DoNotOptimize(rbc::run_suite(cfg, workers));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.count));
    state.counters["workers"] = workers;
}

void BM_RemarkSearchSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rbc::remark_search(3, 3, 3, 20000, 1, 1));
}

void BM_RemarkSearchParallel(benchmark::State& state) {
    const unsigned workers = rbc::default_workers();
    for (auto _ : state) benchmark::DoNotOptimize(rbc::remark_search(3, 3, 3, 20000, 1, workers));
    state.counters["workers"] = workers;
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RemarkSearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RemarkSearchParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
