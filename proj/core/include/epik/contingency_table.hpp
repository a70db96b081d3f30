#pragma once

#include <cstdint>
#include <vector>

namespace epik {

// Per-genotype-class, per-phenotype-class sample counts for one combination
// of variants. Rows follow the first-variant-major order of the genotype
// table the counts were derived from (3^k rows for k variants).
struct ContingencyTable {
    std::vector<std::uint32_t> case_counts;
    std::vector<std::uint32_t> control_counts;
    // Ascending variant indices this table describes; empty for ad-hoc tables.
    std::vector<std::uint32_t> combination;

    std::size_t rows() const noexcept { return case_counts.size(); }
};

} // namespace epik
