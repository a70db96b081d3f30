#include "epik/runtime.hpp"

#include "epik/error.hpp"

#include <algorithm>
#include <exception>
#include <iterator>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace epik {

RunPlan::RunPlan(std::uint32_t threads_, std::uint32_t process_rank_,
                 std::uint32_t process_count_)
    : threads(threads_), process_rank(process_rank_), process_count(process_count_) {
    if (threads == 0) {
        throw DataError("run plan requires at least one thread");
    }
    if (process_count == 0 || process_rank >= process_count) {
        throw DataError("process rank " + std::to_string(process_rank) + " outside [0, " +
                        std::to_string(process_count) + ")");
    }
}

std::vector<ScoredCombination> merge_ranked(std::vector<std::vector<ScoredCombination>> parts,
                                            std::size_t top) {
    std::vector<ScoredCombination> all;
    for (auto& part : parts) {
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    std::sort(all.begin(), all.end(), [](const ScoredCombination& a, const ScoredCombination& b) {
        if (a.mi != b.mi) {
            return a.mi > b.mi;
        }
        return a.combination < b.combination;
    });
    if (all.size() > top) {
        all.resize(top);
    }
    return all;
}

RankedList run_search(const Dataset& dataset, const SearchConfig& config, const RunPlan& plan,
                      SearchStats* stats) {
    const std::uint32_t total_units = plan.total_units();
    std::vector<std::vector<ScoredCombination>> parts(plan.threads);
    std::vector<SearchStats> thread_stats(plan.threads);

    const auto work = [&](std::uint32_t i) {
        const PrefixSchedule schedule(dataset.num_variants(), config.order,
                                      plan.first_unit() + i, total_units);
        parts[i] = search_unit(dataset, schedule, config, &thread_stats[i]).entries();
    };

    if (plan.threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> failures(plan.threads);
        workers.reserve(plan.threads);
        for (std::uint32_t i = 0; i < plan.threads; ++i) {
            workers.emplace_back([&, i] {
                try {
                    work(i);
                } catch (...) {
                    failures[i] = std::current_exception();
                }
            });
        }
        for (auto& w : workers) {
            w.join();
        }
        for (const auto& failure : failures) {
            if (failure) {
                std::rethrow_exception(failure);
            }
        }
    }

    if (stats != nullptr) {
        for (const auto& ts : thread_stats) {
            stats->prefix_tables_built += ts.prefix_tables_built;
            stats->combinations_tested += ts.combinations_tested;
        }
    }

    std::vector<ScoredCombination> merged = merge_ranked(std::move(parts), config.top);
    RankedList result(config.top);
    for (const auto& entry : merged) {
        result.insert(entry.combination, entry.mi);
    }
    return result;
}

std::vector<io::ResultEntry> merge_result_files(const std::vector<std::filesystem::path>& paths,
                                                std::size_t top) {
    if (paths.empty()) {
        throw DataError("merge requires at least one input file");
    }
    std::vector<io::ResultEntry> all;
    std::size_t order = 0;
    for (const auto& path : paths) {
        std::vector<io::ResultEntry> entries = io::read_result_file(path);
        for (auto& entry : entries) {
            if (order == 0) {
                order = entry.variant_ids.size();
            } else if (entry.variant_ids.size() != order) {
                throw IncompatibleResultsError(
                    path.string() + ": combination of " +
                    std::to_string(entry.variant_ids.size()) + " variants, expected " +
                    std::to_string(order));
            }
            all.push_back(std::move(entry));
        }
    }
    std::sort(all.begin(), all.end(), [](const io::ResultEntry& a, const io::ResultEntry& b) {
        if (a.mi != b.mi) {
            return a.mi > b.mi;
        }
        return io::natural_tuple_less(a.variant_ids, b.variant_ids);
    });
    if (all.size() > top) {
        all.resize(top);
    }
    return all;
}

} // namespace epik
