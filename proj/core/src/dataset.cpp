#include "epik/dataset.hpp"

#include "epik/error.hpp"

#include <string>
#include <utility>

namespace epik {

Dataset::Dataset(std::vector<std::string> variant_ids,
                 const std::vector<std::vector<std::uint8_t>>& case_genotypes,
                 const std::vector<std::vector<std::uint8_t>>& control_genotypes)
    : variant_ids_(std::move(variant_ids)) {
    if (variant_ids_.empty() || variant_ids_.size() != case_genotypes.size() ||
        variant_ids_.size() != control_genotypes.size()) {
        throw DataError("dataset requires one id and one genotype row per variant");
    }
    num_cases_ = static_cast<std::uint32_t>(case_genotypes[0].size());
    num_controls_ = static_cast<std::uint32_t>(control_genotypes[0].size());
    tables_.reserve(variant_ids_.size());
    for (std::size_t v = 0; v < variant_ids_.size(); ++v) {
        if (case_genotypes[v].size() != num_cases_ ||
            control_genotypes[v].size() != num_controls_) {
            throw DataError("variant '" + variant_ids_[v] + "': sample count differs from " +
                            "the rest of the dataset");
        }
        tables_.push_back(
            GenotypeTable::from_genotypes(case_genotypes[v], control_genotypes[v],
                                          variant_ids_[v]));
    }
}

} // namespace epik
