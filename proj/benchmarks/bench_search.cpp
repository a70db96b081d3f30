#include "epik/io.hpp"
#include "epik/runtime.hpp"
#include "epik/schedule.hpp"
#include "epik/search.hpp"

#include <benchmark/benchmark.h>

#include <memory>

namespace {

const epik::Dataset& bench_dataset(std::uint32_t variants) {
    static std::unique_ptr<epik::Dataset> ds64;
    static std::unique_ptr<epik::Dataset> ds128;
    auto& slot = variants == 64 ? ds64 : ds128;
    if (!slot) {
        epik::io::GeneratorConfig config;
        config.num_variants = variants;
        config.num_cases = 1024;
        config.num_controls = 1024;
        config.seed = 99;
        slot = std::make_unique<epik::Dataset>(
            epik::io::to_dataset(epik::io::generate_dataset(config).data));
    }
    return *slot;
}

void bm_search_unit(benchmark::State& state) {
    const std::uint32_t order = static_cast<std::uint32_t>(state.range(0));
    const epik::Dataset& ds = bench_dataset(64);
    const epik::SearchConfig config{order, 10, 4096};
    std::uint64_t tested = 0;
    for (auto _ : state) {
        epik::SearchStats stats;
        const auto list =
            epik::search_unit(ds, epik::PrefixSchedule(64, order, 0, 1), config, &stats);
        benchmark::DoNotOptimize(list.entries().data());
        tested += stats.combinations_tested;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(tested));
}

void bm_run_search_threads(benchmark::State& state) {
    const std::uint32_t threads = static_cast<std::uint32_t>(state.range(0));
    const epik::Dataset& ds = bench_dataset(128);
    const epik::SearchConfig config{3, 10, 4096};
    for (auto _ : state) {
        const auto list = epik::run_search(ds, config, epik::RunPlan(threads, 0, 1));
        benchmark::DoNotOptimize(list.entries().data());
    }
}

void bm_balance_enumeration(benchmark::State& state) {
    const std::uint32_t units = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(epik::balance_report(1928, 3, units));
    }
    state.SetItemsProcessed(state.iterations() * 1856001); // prefixes per pass
}

BENCHMARK(bm_search_unit)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_run_search_threads)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(bm_balance_enumeration)->Arg(18)->Arg(522)->Unit(benchmark::kMillisecond);

} // namespace
