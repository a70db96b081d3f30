#include "epik/genotype_table.hpp"
#include "epik/prng.hpp"
#include "epik/stats.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

namespace {

epik::GenotypeTable random_table(std::uint64_t seed, std::size_t cases, std::size_t controls) {
    epik::Xoshiro256pp rng(seed);
    std::vector<std::uint8_t> case_genos(cases);
    std::vector<std::uint8_t> control_genos(controls);
    for (auto& g : case_genos) {
        g = static_cast<std::uint8_t>(rng.bounded(3));
    }
    for (auto& g : control_genos) {
        g = static_cast<std::uint8_t>(rng.bounded(3));
    }
    return epik::GenotypeTable::from_genotypes(case_genos, control_genos);
}

void bm_combine(benchmark::State& state) {
    const std::size_t samples = static_cast<std::size_t>(state.range(0));
    const epik::GenotypeTable a = random_table(1, samples, samples);
    const epik::GenotypeTable b = random_table(2, samples, samples);
    epik::GenotypeTable out;
    for (auto _ : state) {
        epik::GenotypeTable::combine(a, b, out);
        benchmark::DoNotOptimize(out.case_row(0).data());
    }
    state.SetItemsProcessed(state.iterations() * 2 * samples);
}

void bm_combine_depth2(benchmark::State& state) {
    const std::size_t samples = static_cast<std::size_t>(state.range(0));
    const epik::GenotypeTable pair =
        epik::GenotypeTable::combine(random_table(1, samples, samples),
                                     random_table(2, samples, samples));
    const epik::GenotypeTable b = random_table(3, samples, samples);
    epik::GenotypeTable out;
    for (auto _ : state) {
        epik::GenotypeTable::combine(pair, b, out);
        benchmark::DoNotOptimize(out.case_row(0).data());
    }
    state.SetItemsProcessed(state.iterations() * 2 * samples);
}

void bm_combine_and_popcount(benchmark::State& state) {
    const std::size_t samples = static_cast<std::size_t>(state.range(0));
    const epik::GenotypeTable pair =
        epik::GenotypeTable::combine(random_table(1, samples, samples),
                                     random_table(2, samples, samples));
    const epik::GenotypeTable b = random_table(3, samples, samples);
    epik::ContingencyTable ct;
    for (auto _ : state) {
        epik::GenotypeTable::combine_and_popcount(pair, b, ct);
        benchmark::DoNotOptimize(ct.case_counts.data());
    }
    state.SetItemsProcessed(state.iterations() * 2 * samples);
}

void bm_mutual_information(benchmark::State& state) {
    const std::size_t rows = static_cast<std::size_t>(state.range(0));
    epik::Xoshiro256pp rng(7);
    epik::ContingencyTable ct;
    ct.case_counts.resize(rows);
    ct.control_counts.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        ct.case_counts[r] = static_cast<std::uint32_t>(rng.bounded(64));
        ct.control_counts[r] = static_cast<std::uint32_t>(rng.bounded(64));
    }
    ct.case_counts[0] += 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(epik::mutual_information(ct));
    }
    state.SetItemsProcessed(state.iterations() * rows);
}

BENCHMARK(bm_combine)->Arg(1024)->Arg(4096)->Arg(16384);
BENCHMARK(bm_combine_depth2)->Arg(1024)->Arg(4096)->Arg(16384);
BENCHMARK(bm_combine_and_popcount)->Arg(1024)->Arg(4096)->Arg(16384);
BENCHMARK(bm_mutual_information)->Arg(9)->Arg(27)->Arg(81)->Arg(243);

} // namespace
