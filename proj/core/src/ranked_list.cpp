#include "epik/ranked_list.hpp"

#include <algorithm>
#include <stdexcept>

namespace epik {

RankedList::RankedList(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) {
        throw std::invalid_argument("RankedList capacity must be at least 1");
    }
    entries_.reserve(capacity + 1);
}

bool RankedList::ranks_below(const ScoredCombination& a, const ScoredCombination& b) {
    if (a.mi != b.mi) {
        return a.mi < b.mi;
    }
    return b.combination < a.combination;
}

bool RankedList::insert(std::span<const std::uint32_t> combination, double mi) {
    if (entries_.size() >= capacity_ && !(mi > entries_.front().mi)) {
        return false;
    }
    ScoredCombination item{{combination.begin(), combination.end()}, mi};
    const auto pos = std::lower_bound(entries_.begin(), entries_.end(), item, ranks_below);
    entries_.insert(pos, std::move(item));
    if (entries_.size() > capacity_) {
        entries_.erase(entries_.begin());
    }
    return true;
}

std::vector<ScoredCombination> RankedList::ranked() const {
    return {entries_.rbegin(), entries_.rend()};
}

} // namespace epik
