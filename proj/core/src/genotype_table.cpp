#include "epik/genotype_table.hpp"

#include "epik/error.hpp"

#include <bit>
#include <cassert>
#include <string>

namespace epik {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t samples) {
    return (samples + kWordBits - 1) / kWordBits;
}

void fill_plane(std::span<const std::uint8_t> genotypes, std::vector<std::uint64_t>& bits,
                std::size_t words, std::string_view label, std::string_view plane) {
    for (std::size_t s = 0; s < genotypes.size(); ++s) {
        const std::uint8_t g = genotypes[s];
        if (g > 2) {
            std::string msg = "variant '";
            msg += label;
            msg += "': ";
            msg += plane;
            msg += " sample ";
            msg += std::to_string(s);
            msg += ": invalid genotype value ";
            msg += std::to_string(static_cast<unsigned>(g));
            throw InvalidGenotypeError(msg);
        }
        bits[static_cast<std::size_t>(g) * words + s / kWordBits] |= std::uint64_t{1}
                                                                     << (s % kWordBits);
    }
}

std::uint32_t popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint32_t count = 0;
    for (std::size_t w = 0; w < words; ++w) {
        count += static_cast<std::uint32_t>(std::popcount(a[w] & b[w]));
    }
    return count;
}

void check_compatible(const GenotypeTable& a, const GenotypeTable& b) {
    if (a.num_cases() != b.num_cases() || a.num_controls() != b.num_controls()) {
        throw IncompatibleTablesError(
            "cannot combine genotype tables over different samples (" +
            std::to_string(a.num_cases()) + "+" + std::to_string(a.num_controls()) + " vs " +
            std::to_string(b.num_cases()) + "+" + std::to_string(b.num_controls()) + ")");
    }
}

} // namespace

GenotypeTable GenotypeTable::from_genotypes(std::span<const std::uint8_t> case_genotypes,
                                            std::span<const std::uint8_t> control_genotypes,
                                            std::string_view label) {
    if (case_genotypes.empty() || control_genotypes.empty()) {
        std::string msg = "variant '";
        msg += label;
        msg += "': empty sample list";
        throw DataError(msg);
    }
    GenotypeTable t;
    t.depth_ = 1;
    t.rows_ = 3;
    t.num_cases_ = static_cast<std::uint32_t>(case_genotypes.size());
    t.num_controls_ = static_cast<std::uint32_t>(control_genotypes.size());
    t.case_words_ = words_for(t.num_cases_);
    t.control_words_ = words_for(t.num_controls_);
    t.case_bits_.assign(t.rows_ * t.case_words_, 0);
    t.control_bits_.assign(t.rows_ * t.control_words_, 0);
    fill_plane(case_genotypes, t.case_bits_, t.case_words_, label, "case");
    fill_plane(control_genotypes, t.control_bits_, t.control_words_, label, "control");
    return t;
}

void GenotypeTable::combine(const GenotypeTable& a, const GenotypeTable& b, GenotypeTable& out) {
    assert(&out != &a && &out != &b);
    check_compatible(a, b);
    out.depth_ = a.depth_ + b.depth_;
    out.rows_ = a.rows_ * b.rows_;
    out.num_cases_ = a.num_cases_;
    out.num_controls_ = a.num_controls_;
    out.case_words_ = a.case_words_;
    out.control_words_ = a.control_words_;
    out.case_bits_.resize(out.rows_ * out.case_words_);
    out.control_bits_.resize(out.rows_ * out.control_words_);

    std::uint64_t* dst = out.case_bits_.data();
    for (std::size_t ra = 0; ra < a.rows_; ++ra) {
        const std::uint64_t* arow = a.case_bits_.data() + ra * a.case_words_;
        for (std::size_t rb = 0; rb < b.rows_; ++rb) {
            const std::uint64_t* brow = b.case_bits_.data() + rb * b.case_words_;
            for (std::size_t w = 0; w < a.case_words_; ++w) {
                *dst++ = arow[w] & brow[w];
            }
        }
    }
    dst = out.control_bits_.data();
    for (std::size_t ra = 0; ra < a.rows_; ++ra) {
        const std::uint64_t* arow = a.control_bits_.data() + ra * a.control_words_;
        for (std::size_t rb = 0; rb < b.rows_; ++rb) {
            const std::uint64_t* brow = b.control_bits_.data() + rb * b.control_words_;
            for (std::size_t w = 0; w < a.control_words_; ++w) {
                *dst++ = arow[w] & brow[w];
            }
        }
    }
}

GenotypeTable GenotypeTable::combine(const GenotypeTable& a, const GenotypeTable& b) {
    GenotypeTable out;
    combine(a, b, out);
    return out;
}

void GenotypeTable::combine_and_popcount(const GenotypeTable& a, const GenotypeTable& b,
                                         ContingencyTable& out) {
    check_compatible(a, b);
    const std::size_t rows = a.rows_ * b.rows_;
    out.case_counts.resize(rows);
    out.control_counts.resize(rows);
    std::size_t r = 0;
    for (std::size_t ra = 0; ra < a.rows_; ++ra) {
        const std::uint64_t* acase = a.case_bits_.data() + ra * a.case_words_;
        const std::uint64_t* actrl = a.control_bits_.data() + ra * a.control_words_;
        for (std::size_t rb = 0; rb < b.rows_; ++rb, ++r) {
            out.case_counts[r] = popcount_words(
                acase, b.case_bits_.data() + rb * b.case_words_, a.case_words_);
            out.control_counts[r] = popcount_words(
                actrl, b.control_bits_.data() + rb * b.control_words_, a.control_words_);
        }
    }
}

ContingencyTable GenotypeTable::combine_and_popcount(const GenotypeTable& a,
                                                     const GenotypeTable& b) {
    ContingencyTable out;
    combine_and_popcount(a, b, out);
    return out;
}

ContingencyTable popcount_rows(const GenotypeTable& table) {
    ContingencyTable out;
    out.case_counts.resize(table.rows());
    out.control_counts.resize(table.rows());
    for (std::size_t r = 0; r < table.rows(); ++r) {
        std::uint32_t c = 0;
        for (const std::uint64_t w : table.case_row(r)) {
            c += static_cast<std::uint32_t>(std::popcount(w));
        }
        out.case_counts[r] = c;
        c = 0;
        for (const std::uint64_t w : table.control_row(r)) {
            c += static_cast<std::uint32_t>(std::popcount(w));
        }
        out.control_counts[r] = c;
    }
    return out;
}

} // namespace epik
