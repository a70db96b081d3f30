#pragma once

#include "epik/dataset.hpp"
#include "epik/io.hpp"
#include "epik/ranked_list.hpp"
#include "epik/search.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace epik {

// How one invocation maps onto the global pool of processing units.
//
// With t threads and q externally launched processes there are p = t*q units;
// process r owns the contiguous unit ranks [r*t, (r+1)*t). Every process must
// be launched with the same thread count for the unit pool to be consistent.
struct RunPlan {
    RunPlan(std::uint32_t threads_, std::uint32_t process_rank_, std::uint32_t process_count_);

    std::uint32_t threads;
    std::uint32_t process_rank;
    std::uint32_t process_count;

    std::uint32_t total_units() const noexcept { return threads * process_count; }
    std::uint32_t first_unit() const noexcept { return process_rank * threads; }
};

// Runs this process's share of the search on `plan.threads` worker threads
// and merges their lists into one top-S result. Workers share only the
// immutable dataset; the merge is deterministic (descending score, ties by
// ascending combination), so any split of units over threads and processes
// produces identical output. A worker failure aborts the run.
RankedList run_search(const Dataset& dataset, const SearchConfig& config, const RunPlan& plan,
                      SearchStats* stats = nullptr);

// Deterministic merge used by run_search, exposed for reuse: concatenates,
// sorts by (mi descending, combination ascending), truncates to `top`.
std::vector<ScoredCombination> merge_ranked(std::vector<std::vector<ScoredCombination>> parts,
                                            std::size_t top);

// Gathers partial result files written by per-process runs into the final
// top-S list, resolving score ties by the natural order of the id tuples.
// All files must come from runs with the same interaction order.
std::vector<io::ResultEntry> merge_result_files(const std::vector<std::filesystem::path>& paths,
                                                std::size_t top);

} // namespace epik
