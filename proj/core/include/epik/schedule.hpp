#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace epik {

// Static assignment of search prefixes to one processing unit.
//
// The workload for an order-k search is split by (k-1)-prefixes: every
// combination of k variants is owned by the unit that owns its first k-1
// elements. Prefixes are enumerated in ascending lexicographic order and
// dealt round-robin, so unit u receives the prefixes whose rank r satisfies
// r % total_units == u.
//
// Only prefixes with at least one valid tail variant take part, i.e. the
// (k-1)-subsets of {0..n-2}: a prefix ending at the last variant heads no
// k-combination and would otherwise consume a round-robin slot for no work.
struct PrefixSchedule {
    PrefixSchedule(std::uint32_t num_variants, std::uint32_t order, std::uint32_t unit_rank,
                   std::uint32_t total_units);

    std::uint32_t num_variants; // n
    std::uint32_t order;        // k
    std::uint32_t unit_rank;    // in [0, total_units)
    std::uint32_t total_units;  // p
};

// Streams one unit's prefixes in ascending lexicographic order without
// materializing the sequence.
class PrefixStream {
public:
    explicit PrefixStream(const PrefixSchedule& schedule);

    // Fills `prefix` (resized to order-1) with the next assigned prefix.
    // Returns false once the unit's share is exhausted.
    bool next(std::vector<std::uint32_t>& prefix);

private:
    bool advance(std::uint32_t steps);

    std::vector<std::uint32_t> current_;
    std::uint32_t max_value_;
    std::uint32_t stride_;
    bool pending_ = false;
    bool done_ = false;
};

// Number of k-combinations headed by `prefix`: the valid tail variants are
// exactly those greater than its last element.
std::uint64_t tail_count(std::span<const std::uint32_t> prefix, std::uint32_t num_variants);

// Workload distribution summary for an (n, k, p) schedule.
struct BalanceReport {
    std::uint32_t num_variants = 0;
    std::uint32_t order = 0;
    std::uint32_t units = 0;
    std::uint64_t total = 0;                     // C(n, k)
    std::vector<std::uint64_t> per_unit_counts;  // combinations tested by each unit
    double max_deviation_pct = 0.0;              // 100 * (max - total/p) / (total/p)
};

// Computes per-unit combination counts by streaming the prefix enumeration
// once (k-combinations are never enumerated). Throws OverflowError when
// C(n, k) does not fit a 64-bit counter.
BalanceReport balance_report(std::uint32_t num_variants, std::uint32_t order,
                             std::uint32_t units);

// CSV emission: header n,k,p,unit,count,deviation_pct, one row per unit with
// its signed deviation from the mean, then a summary row (unit = "summary")
// carrying the total combination count and the maximum deviation.
void write_balance_csv(const BalanceReport& report, std::ostream& out);

} // namespace epik
