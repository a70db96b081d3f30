#pragma once

#include "epik/contingency_table.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace epik {

// Bit-packed genotype matrix for one variant or a combination of variants.
//
// A table of depth d has 3^d rows, one per joint genotype class. Each row
// holds one bit per sample, split into a case plane and a control plane that
// are padded independently to a 64-bit word boundary. Sample s sits in word
// s/64, bit s%64 of its plane. Exactly one row has a 1 for every sample
// (each individual has exactly one genotype), and all padding bits are zero,
// which makes population counts over whole rows exact.
//
// Tables are immutable once built and safe to share across threads.
class GenotypeTable {
public:
    GenotypeTable() = default;

    // Builds a depth-1 table from raw genotype values in {0, 1, 2}, one per
    // sample, cases and controls listed separately. `label` names the variant
    // in diagnostics.
    static GenotypeTable from_genotypes(std::span<const std::uint8_t> case_genotypes,
                                        std::span<const std::uint8_t> control_genotypes,
                                        std::string_view label = {});

    // Row-wise intersection of two tables over the same samples. Result row
    // (i * b.rows() + j) is the bitwise AND of a.row(i) and b.row(j), so the
    // first operand is row-major. `out` must not alias an input.
    static void combine(const GenotypeTable& a, const GenotypeTable& b, GenotypeTable& out);
    static GenotypeTable combine(const GenotypeTable& a, const GenotypeTable& b);

    // Population counts of combine(a, b) without materializing the combined
    // table. Fills case_counts/control_counts; leaves `combination` untouched.
    static void combine_and_popcount(const GenotypeTable& a, const GenotypeTable& b,
                                     ContingencyTable& out);
    static ContingencyTable combine_and_popcount(const GenotypeTable& a, const GenotypeTable& b);

    unsigned depth() const noexcept { return depth_; }
    std::size_t rows() const noexcept { return rows_; }
    std::uint32_t num_cases() const noexcept { return num_cases_; }
    std::uint32_t num_controls() const noexcept { return num_controls_; }
    std::size_t case_words() const noexcept { return case_words_; }
    std::size_t control_words() const noexcept { return control_words_; }

    std::span<const std::uint64_t> case_row(std::size_t row) const noexcept {
        return {case_bits_.data() + row * case_words_, case_words_};
    }
    std::span<const std::uint64_t> control_row(std::size_t row) const noexcept {
        return {control_bits_.data() + row * control_words_, control_words_};
    }

private:
    unsigned depth_ = 0;
    std::size_t rows_ = 0;
    std::uint32_t num_cases_ = 0;
    std::uint32_t num_controls_ = 0;
    std::size_t case_words_ = 0;
    std::size_t control_words_ = 0;
    std::vector<std::uint64_t> case_bits_;    // row-major, rows_ * case_words_
    std::vector<std::uint64_t> control_bits_; // row-major, rows_ * control_words_
};

// Row population counts of a single table (no combination step).
ContingencyTable popcount_rows(const GenotypeTable& table);

} // namespace epik
