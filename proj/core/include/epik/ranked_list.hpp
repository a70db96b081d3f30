#pragma once

#include "epik/stats.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace epik {

// Bounded list of the highest scoring combinations seen so far.
//
// Entries are kept sorted worst-first: ascending mutual information, and for
// equal scores the lexicographically larger combination first, so the entry
// evicted on overflow is always the one that ranks lowest. A full list only
// admits a candidate whose score strictly exceeds the current minimum; a
// candidate that merely ties the minimum is dropped. Units enumerate
// combinations in ascending order, so of tied entries at the cut-off the
// lexicographically smallest survives, which keeps results independent of
// how the search is split across units.
class RankedList {
public:
    explicit RankedList(std::size_t capacity);

    // Returns true if the candidate was admitted.
    bool insert(std::span<const std::uint32_t> combination, double mi);

    // Worst-first internal order.
    const std::vector<ScoredCombination>& entries() const noexcept { return entries_; }

    // Output order: descending score, ties by ascending combination.
    std::vector<ScoredCombination> ranked() const;

    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t size() const noexcept { return entries_.size(); }

    // True when `a` ranks strictly below `b`.
    static bool ranks_below(const ScoredCombination& a, const ScoredCombination& b);

private:
    std::size_t capacity_;
    std::vector<ScoredCombination> entries_;
};

} // namespace epik
