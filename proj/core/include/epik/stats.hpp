#pragma once

#include "epik/contingency_table.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace epik {

// A combination of variants together with its association score in nats.
struct ScoredCombination {
    std::vector<std::uint32_t> combination; // ascending variant indices
    double mi = 0.0;
};

// Shannon entropy of a count distribution, in nats. `total` must equal the
// sum of the counts. Zero-count cells contribute nothing.
double entropy(std::span<const std::uint32_t> counts, std::uint64_t total);

// Mutual information between the genotype rows and the case/control split of
// a contingency table, in nats: H(X) + H(Y) - H(X,Y). Non-negative; computed
// with natural logarithms and clamped at zero against rounding.
double mutual_information(const ContingencyTable& ct);

} // namespace epik
