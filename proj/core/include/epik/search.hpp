#pragma once

#include "epik/dataset.hpp"
#include "epik/ranked_list.hpp"
#include "epik/schedule.hpp"

#include <cstdint>

namespace epik {

struct SearchConfig {
    std::uint32_t order = 2;   // k, number of variants per combination
    std::size_t top = 10;      // S, result list capacity
    std::size_t block = 4096;  // B, contingency tables scored per batch
};

// Instrumentation filled by search_unit; cheap enough to always collect.
struct SearchStats {
    std::uint64_t prefix_tables_built = 0;  // one per scheduled prefix
    std::uint64_t combinations_tested = 0;
};

// Runs the scan over one unit's share of the combination space.
//
// For every assigned prefix the genotype table is built progressively, one
// combine per additional variant; each tail variant then yields a contingency
// table via combine_and_popcount into a block buffer. Full blocks are scored
// with mutual_information and fed to the ranked list in one sweep, which
// keeps the floating-point stage separate from the table construction stage.
// Blocking does not affect the result, only execution order.
RankedList search_unit(const Dataset& dataset, const PrefixSchedule& schedule,
                       const SearchConfig& config, SearchStats* stats = nullptr);

} // namespace epik
