#pragma once

#include "epik/dataset.hpp"
#include "epik/stats.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epik::io {

// In file order: one genotype row per variant, one phenotype per sample.
// Genotype file: `<variant_id> <g_1> ... <g_m>` per line, g in {0,1,2}.
// Phenotype file: m lines, `1` for a case and `0` for a control.
struct SampleMatrix {
    std::vector<std::string> variant_ids;
    std::vector<std::vector<std::uint8_t>> genotypes; // [variant][sample]
    std::vector<std::uint8_t> phenotypes;             // [sample]

    std::size_t num_samples() const noexcept { return phenotypes.size(); }
};

// Parses the two input files. Diagnostics carry file role and line number.
SampleMatrix load_raw(const std::filesystem::path& genotype_path,
                      const std::filesystem::path& phenotype_path);

// Partitions samples by phenotype (file order preserved within each class)
// and packs one depth-1 genotype table per variant.
Dataset to_dataset(const SampleMatrix& raw);
Dataset load_dataset(const std::filesystem::path& genotype_path,
                     const std::filesystem::path& phenotype_path);

void write_genotype_file(std::ostream& out, const SampleMatrix& raw);
void write_phenotype_file(std::ostream& out, const SampleMatrix& raw);

// --- synthetic data -------------------------------------------------------

struct PlantedInteraction {
    std::uint32_t order = 2;
    double contrast = 0.0; // in [0, 1]; 0 means no effect
};

struct GeneratorConfig {
    std::uint32_t num_variants = 0;
    std::uint32_t num_cases = 1024;
    std::uint32_t num_controls = 1024;
    std::uint64_t seed = 0;
    std::optional<PlantedInteraction> planted;
};

struct GeneratedDataset {
    SampleMatrix data;
    std::vector<std::uint32_t> planted; // indices; empty when nothing planted
};

// Draws genotypes with per-variant allele frequencies from a seeded
// generator (byte-identical runs for equal seeds). When an interaction is
// planted, the first `order` variants steer the case/control assignment
// through a parity penetrance with the requested contrast, so the planted
// tuple has the highest expected association of any combination.
GeneratedDataset generate_dataset(const GeneratorConfig& config);

// --- result files ----------------------------------------------------------

// TSV with header `rank\tvariants\tmi`; `variants` is a comma-joined id
// list; mi printed with 17 significant digits so values round-trip exactly.
void write_result_file(std::ostream& out, std::span<const ScoredCombination> ranked,
                       std::span<const std::string> variant_ids);

// A result row as read back from disk: ids instead of indices.
struct ResultEntry {
    std::vector<std::string> variant_ids;
    double mi = 0.0;
};

std::vector<ResultEntry> read_result_file(const std::filesystem::path& path);
void write_result_entries(std::ostream& out, std::span<const ResultEntry> ranked);

// Digit-run aware ordering (v2 before v10), so id tuples rank the same way
// as the index tuples they were written from. Equal-valued digit runs with
// different spellings fall back to byte order.
int natural_compare(std::string_view a, std::string_view b) noexcept;
bool natural_tuple_less(std::span<const std::string> a, std::span<const std::string> b) noexcept;

} // namespace epik::io
