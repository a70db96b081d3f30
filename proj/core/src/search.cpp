#include "epik/search.hpp"

#include "epik/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace epik {

RankedList search_unit(const Dataset& dataset, const PrefixSchedule& schedule,
                       const SearchConfig& config, SearchStats* stats) {
    if (schedule.num_variants != dataset.num_variants() || schedule.order != config.order) {
        throw std::invalid_argument("search_unit: schedule does not match dataset/config");
    }
    if (config.block == 0) {
        throw std::invalid_argument("search_unit: block size must be at least 1");
    }
    const std::uint32_t n = dataset.num_variants();
    const std::uint32_t k = config.order;

    RankedList results(config.top);
    std::vector<ContingencyTable> block(config.block);
    std::size_t filled = 0;

    const auto score_block = [&](std::size_t count) {
        for (std::size_t l = 0; l < count; ++l) {
            results.insert(block[l].combination, mutual_information(block[l]));
        }
    };

    // Scratch tables for the progressive prefix construction (depths 2..k-1).
    std::vector<GenotypeTable> chain(k >= 3 ? k - 2 : 0);
    std::vector<std::uint32_t> prefix;
    std::vector<std::uint32_t> combination(k);

    PrefixStream prefixes(schedule);
    while (prefixes.next(prefix)) {
        const GenotypeTable* table = &dataset.table(prefix[0]);
        for (std::uint32_t j = 1; j + 1 < k; ++j) {
            GenotypeTable::combine(*table, dataset.table(prefix[j]), chain[j - 1]);
            table = &chain[j - 1];
        }
        if (stats != nullptr) {
            ++stats->prefix_tables_built;
        }
        std::copy(prefix.begin(), prefix.end(), combination.begin());
        for (std::uint32_t j = prefix.back() + 1; j < n; ++j) {
            if (filled == config.block) {
                score_block(filled);
                filled = 0;
            }
            ContingencyTable& ct = block[filled];
            GenotypeTable::combine_and_popcount(*table, dataset.table(j), ct);
            combination.back() = j;
            ct.combination = combination;
            ++filled;
            if (stats != nullptr) {
                ++stats->combinations_tested;
            }
        }
    }
    score_block(filled);
    return results;
}

} // namespace epik
