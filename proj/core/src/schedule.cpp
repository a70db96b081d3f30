#include "epik/schedule.hpp"

#include "epik/combinatorics.hpp"
#include "epik/error.hpp"

#include <cassert>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

namespace epik {

PrefixSchedule::PrefixSchedule(std::uint32_t num_variants_, std::uint32_t order_,
                               std::uint32_t unit_rank_, std::uint32_t total_units_)
    : num_variants(num_variants_), order(order_), unit_rank(unit_rank_),
      total_units(total_units_) {
    if (order < 2) {
        throw InvalidOrderError("interaction order must be at least 2, got " +
                                std::to_string(order));
    }
    if (order > num_variants) {
        throw InvalidOrderError("interaction order " + std::to_string(order) +
                                " exceeds the variant count " + std::to_string(num_variants));
    }
    if (total_units == 0 || unit_rank >= total_units) {
        throw DataError("unit rank " + std::to_string(unit_rank) +
                        " outside [0, " + std::to_string(total_units) + ")");
    }
}

PrefixStream::PrefixStream(const PrefixSchedule& schedule)
    : current_(schedule.order - 1), max_value_(schedule.num_variants - 2),
      stride_(schedule.total_units) {
    std::iota(current_.begin(), current_.end(), 0U);
    // The first prefix, {0..k-2}, always has a non-empty tail (k <= n).
    pending_ = true;
    if (schedule.unit_rank > 0 && !advance(schedule.unit_rank)) {
        done_ = true;
    }
}

bool PrefixStream::advance(std::uint32_t steps) {
    for (std::uint32_t i = 0; i < steps; ++i) {
        if (!next_combination(current_, max_value_)) {
            return false;
        }
    }
    return true;
}

bool PrefixStream::next(std::vector<std::uint32_t>& prefix) {
    if (done_) {
        return false;
    }
    if (!pending_ && !advance(stride_)) {
        done_ = true;
        return false;
    }
    pending_ = false;
    prefix = current_;
    return true;
}

std::uint64_t tail_count(std::span<const std::uint32_t> prefix, std::uint32_t num_variants) {
    assert(!prefix.empty() && prefix.back() < num_variants);
    return num_variants - 1 - prefix.back();
}

BalanceReport balance_report(std::uint32_t num_variants, std::uint32_t order,
                             std::uint32_t units) {
    // Validates n/k the same way a unit schedule would.
    PrefixSchedule schedule(num_variants, order, 0, units);
    (void)schedule;

    BalanceReport report;
    report.num_variants = num_variants;
    report.order = order;
    report.units = units;
    report.total = binomial(num_variants, order);
    report.per_unit_counts.assign(units, 0);

    // One pass over the prefix universe with a rotating unit cursor; each
    // prefix contributes its tail count to the unit that owns it.
    std::vector<std::uint32_t> prefix(order - 1);
    std::iota(prefix.begin(), prefix.end(), 0U);
    const std::uint32_t max_value = num_variants - 2;
    std::uint32_t unit = 0;
    do {
        report.per_unit_counts[unit] += num_variants - 1 - prefix.back();
        ++unit;
        if (unit == units) {
            unit = 0;
        }
    } while (next_combination(prefix, max_value));

    std::uint64_t assigned = 0;
    std::uint64_t max_count = 0;
    for (const std::uint64_t c : report.per_unit_counts) {
        assigned += c;
        max_count = max_count < c ? c : max_count;
    }
    assert(assigned == report.total);
    const double mean = static_cast<double>(report.total) / static_cast<double>(units);
    report.max_deviation_pct = 100.0 * (static_cast<double>(max_count) - mean) / mean;
    return report;
}

void write_balance_csv(const BalanceReport& report, std::ostream& out) {
    const double mean =
        static_cast<double>(report.total) / static_cast<double>(report.units);
    char buf[64];
    out << "n,k,p,unit,count,deviation_pct\n";
    for (std::uint32_t u = 0; u < report.units; ++u) {
        const double dev =
            100.0 * (static_cast<double>(report.per_unit_counts[u]) - mean) / mean;
        std::snprintf(buf, sizeof buf, "%.10g", dev);
        out << report.num_variants << ',' << report.order << ',' << report.units << ',' << u
            << ',' << report.per_unit_counts[u] << ',' << buf << '\n';
    }
    std::snprintf(buf, sizeof buf, "%.10g", report.max_deviation_pct);
    out << report.num_variants << ',' << report.order << ',' << report.units << ",summary,"
        << report.total << ',' << buf << '\n';
}

} // namespace epik
