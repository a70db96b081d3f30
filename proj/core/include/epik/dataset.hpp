#pragma once

#include "epik/genotype_table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace epik {

// Immutable case/control-segregated genotype matrix: one depth-1 table per
// variant, all over the same samples. Safe to share read-only across workers.
class Dataset {
public:
    Dataset(std::vector<std::string> variant_ids,
            const std::vector<std::vector<std::uint8_t>>& case_genotypes,
            const std::vector<std::vector<std::uint8_t>>& control_genotypes);

    std::uint32_t num_variants() const noexcept {
        return static_cast<std::uint32_t>(tables_.size());
    }
    std::uint32_t num_cases() const noexcept { return num_cases_; }
    std::uint32_t num_controls() const noexcept { return num_controls_; }

    const GenotypeTable& table(std::uint32_t variant) const { return tables_[variant]; }
    const std::string& variant_id(std::uint32_t variant) const { return variant_ids_[variant]; }
    const std::vector<std::string>& variant_ids() const noexcept { return variant_ids_; }

private:
    std::vector<std::string> variant_ids_;
    std::vector<GenotypeTable> tables_;
    std::uint32_t num_cases_ = 0;
    std::uint32_t num_controls_ = 0;
};

} // namespace epik
