#include "epik/io.hpp"

#include "epik/error.hpp"
#include "epik/prng.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

namespace epik::io {

namespace {

std::string loc(const std::filesystem::path& path, std::size_t line) {
    return path.string() + ":" + std::to_string(line);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path.string() + "'");
    }
    return in;
}

void split_ws(std::string_view line, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
}

std::string fmt_mi(double mi) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", mi);
    return buf;
}

} // namespace

SampleMatrix load_raw(const std::filesystem::path& genotype_path,
                      const std::filesystem::path& phenotype_path) {
    SampleMatrix raw;

    std::ifstream geno = open_or_throw(genotype_path);
    std::string line;
    std::vector<std::string_view> tokens;
    std::size_t line_no = 0;
    std::size_t num_samples = 0;
    while (std::getline(geno, line)) {
        ++line_no;
        split_ws(line, tokens);
        if (tokens.empty()) {
            continue; // ignore blank lines
        }
        if (tokens.size() < 2) {
            throw ParseError(loc(genotype_path, line_no) + ": variant line with no genotypes");
        }
        const std::string id(tokens[0]);
        if (raw.variant_ids.empty()) {
            num_samples = tokens.size() - 1;
        } else if (tokens.size() - 1 != num_samples) {
            throw ParseError(loc(genotype_path, line_no) + ": expected " +
                             std::to_string(num_samples) + " genotypes, found " +
                             std::to_string(tokens.size() - 1));
        }
        for (const auto& existing : raw.variant_ids) {
            if (existing == id) {
                throw ParseError(loc(genotype_path, line_no) + ": duplicate variant id '" + id +
                                 "'");
            }
        }
        std::vector<std::uint8_t> row(num_samples);
        for (std::size_t s = 0; s < num_samples; ++s) {
            const std::string_view tok = tokens[s + 1];
            if (tok.size() != 1 || tok[0] < '0' || tok[0] > '2') {
                throw InvalidGenotypeError(loc(genotype_path, line_no) + ": variant '" + id +
                                           "', sample " + std::to_string(s) +
                                           ": invalid genotype '" + std::string(tok) + "'");
            }
            row[s] = static_cast<std::uint8_t>(tok[0] - '0');
        }
        raw.variant_ids.push_back(id);
        raw.genotypes.push_back(std::move(row));
    }
    if (raw.variant_ids.empty()) {
        throw ParseError(genotype_path.string() + ": no variants found");
    }

    std::ifstream pheno = open_or_throw(phenotype_path);
    line_no = 0;
    while (std::getline(pheno, line)) {
        ++line_no;
        split_ws(line, tokens);
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() != 1 || tokens[0].size() != 1 ||
            (tokens[0][0] != '0' && tokens[0][0] != '1')) {
            throw ParseError(loc(phenotype_path, line_no) + ": expected '0' or '1'");
        }
        raw.phenotypes.push_back(static_cast<std::uint8_t>(tokens[0][0] - '0'));
    }
    if (raw.phenotypes.size() != num_samples) {
        throw ParseError(phenotype_path.string() + ": " + std::to_string(raw.phenotypes.size()) +
                         " phenotypes for " + std::to_string(num_samples) + " samples");
    }
    return raw;
}

Dataset to_dataset(const SampleMatrix& raw) {
    std::size_t cases = 0;
    for (const std::uint8_t p : raw.phenotypes) {
        cases += p;
    }
    if (cases == 0) {
        throw DataError("phenotype file defines no cases");
    }
    if (cases == raw.phenotypes.size()) {
        throw DataError("phenotype file defines no controls");
    }

    const std::size_t n = raw.variant_ids.size();
    std::vector<std::vector<std::uint8_t>> case_genos(n);
    std::vector<std::vector<std::uint8_t>> control_genos(n);
    for (std::size_t v = 0; v < n; ++v) {
        case_genos[v].reserve(cases);
        control_genos[v].reserve(raw.phenotypes.size() - cases);
        for (std::size_t s = 0; s < raw.phenotypes.size(); ++s) {
            (raw.phenotypes[s] == 1 ? case_genos[v] : control_genos[v])
                .push_back(raw.genotypes[v][s]);
        }
    }
    return Dataset(raw.variant_ids, case_genos, control_genos);
}

Dataset load_dataset(const std::filesystem::path& genotype_path,
                     const std::filesystem::path& phenotype_path) {
    return to_dataset(load_raw(genotype_path, phenotype_path));
}

void write_genotype_file(std::ostream& out, const SampleMatrix& raw) {
    for (std::size_t v = 0; v < raw.variant_ids.size(); ++v) {
        out << raw.variant_ids[v];
        for (const std::uint8_t g : raw.genotypes[v]) {
            out << ' ' << static_cast<unsigned>(g);
        }
        out << '\n';
    }
}

void write_phenotype_file(std::ostream& out, const SampleMatrix& raw) {
    for (const std::uint8_t p : raw.phenotypes) {
        out << static_cast<unsigned>(p) << '\n';
    }
}

GeneratedDataset generate_dataset(const GeneratorConfig& config) {
    if (config.num_variants == 0) {
        throw GenerationError("generator requires at least one variant");
    }
    if (config.num_cases == 0 || config.num_controls == 0) {
        throw GenerationError("generator requires at least one case and one control");
    }
    std::uint32_t planted_order = 0;
    double contrast = 0.0;
    if (config.planted.has_value()) {
        planted_order = config.planted->order;
        contrast = config.planted->contrast;
        if (planted_order < 1 || planted_order > config.num_variants) {
            throw GenerationError("planted order " + std::to_string(planted_order) +
                                  " outside [1, " + std::to_string(config.num_variants) + "]");
        }
        if (contrast < 0.0 || contrast > 1.0) {
            throw GenerationError("contrast " + std::to_string(contrast) +
                                  " outside [0, 1]");
        }
    }

    Xoshiro256pp rng(config.seed);
    const std::uint32_t n = config.num_variants;

    GeneratedDataset out;
    out.data.variant_ids.reserve(n);
    out.data.genotypes.assign(n, {});
    std::vector<double> freq(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        out.data.variant_ids.push_back("v" + std::to_string(v));
        freq[v] = 0.2 + 0.6 * rng.uniform();
    }

    const std::size_t total = static_cast<std::size_t>(config.num_cases) + config.num_controls;
    for (auto& column : out.data.genotypes) {
        column.reserve(total);
    }
    out.data.phenotypes.reserve(total);

    std::vector<std::uint8_t> sample(n);
    const auto draw_sample = [&] {
        for (std::uint32_t v = 0; v < n; ++v) {
            const std::uint8_t g = static_cast<std::uint8_t>((rng.uniform() < freq[v]) +
                                                             (rng.uniform() < freq[v]));
            sample[v] = g;
        }
    };
    const auto keep_sample = [&](std::uint8_t phenotype) {
        for (std::uint32_t v = 0; v < n; ++v) {
            out.data.genotypes[v].push_back(sample[v]);
        }
        out.data.phenotypes.push_back(phenotype);
    };

    if (!config.planted.has_value()) {
        for (std::size_t s = 0; s < total; ++s) {
            draw_sample();
            keep_sample(s < config.num_cases ? 1 : 0);
        }
        return out;
    }

    // Penetrance by parity of the planted variants' genotype sum: samples of
    // one parity class become cases with probability (1 + contrast) / 2, the
    // other with (1 - contrast) / 2. Drawn samples whose class is already
    // full are discarded, which keeps the class sizes exact without biasing
    // the retained genotype distribution.
    std::uint32_t cases_left = config.num_cases;
    std::uint32_t controls_left = config.num_controls;
    const std::size_t max_draws = 1024 + 64 * total;
    std::size_t draws = 0;
    while (cases_left > 0 || controls_left > 0) {
        if (++draws > max_draws) {
            throw GenerationError("class sampling did not converge; contrast infeasible "
                                  "for the requested class sizes");
        }
        draw_sample();
        std::uint32_t parity = 0;
        for (std::uint32_t v = 0; v < planted_order; ++v) {
            parity += sample[v];
        }
        const double shift = (parity % 2 == 0) ? contrast : -contrast;
        const bool is_case = rng.uniform() < 0.5 * (1.0 + shift);
        if (is_case && cases_left > 0) {
            keep_sample(1);
            --cases_left;
        } else if (!is_case && controls_left > 0) {
            keep_sample(0);
            --controls_left;
        }
    }
    out.planted.resize(planted_order);
    for (std::uint32_t v = 0; v < planted_order; ++v) {
        out.planted[v] = v;
    }
    return out;
}

void write_result_file(std::ostream& out, std::span<const ScoredCombination> ranked,
                       std::span<const std::string> variant_ids) {
    out << "rank\tvariants\tmi\n";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        out << i + 1 << '\t';
        for (std::size_t j = 0; j < ranked[i].combination.size(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << variant_ids[ranked[i].combination[j]];
        }
        out << '\t' << fmt_mi(ranked[i].mi) << '\n';
    }
}

void write_result_entries(std::ostream& out, std::span<const ResultEntry> ranked) {
    out << "rank\tvariants\tmi\n";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        out << i + 1 << '\t';
        for (std::size_t j = 0; j < ranked[i].variant_ids.size(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << ranked[i].variant_ids[j];
        }
        out << '\t' << fmt_mi(ranked[i].mi) << '\n';
    }
}

std::vector<ResultEntry> read_result_file(const std::filesystem::path& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line) || line != "rank\tvariants\tmi") {
        throw ParseError(loc(path, 1) + ": missing result header 'rank\\tvariants\\tmi'");
    }
    std::vector<ResultEntry> entries;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const std::size_t tab1 = line.find('\t');
        const std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                           : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) {
            throw ParseError(loc(path, line_no) + ": expected 3 tab-separated fields");
        }
        const std::string rank_field = line.substr(0, tab1);
        const std::string ids_field = line.substr(tab1 + 1, tab2 - tab1 - 1);
        const std::string mi_field = line.substr(tab2 + 1);

        char* end = nullptr;
        errno = 0;
        const unsigned long rank = std::strtoul(rank_field.c_str(), &end, 10);
        if (rank == 0 || errno != 0 || end == rank_field.c_str() || *end != '\0') {
            throw ParseError(loc(path, line_no) + ": invalid rank '" + rank_field + "'");
        }

        ResultEntry entry;
        std::size_t start = 0;
        while (start <= ids_field.size()) {
            const std::size_t comma = ids_field.find(',', start);
            const std::string id = ids_field.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (id.empty()) {
                throw ParseError(loc(path, line_no) + ": empty variant id");
            }
            entry.variant_ids.push_back(id);
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }

        errno = 0;
        entry.mi = std::strtod(mi_field.c_str(), &end);
        if (errno != 0 || end == mi_field.c_str() || *end != '\0') {
            throw ParseError(loc(path, line_no) + ": invalid mi value '" + mi_field + "'");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

int natural_compare(std::string_view a, std::string_view b) noexcept {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ia = i;
            std::size_t jb = j;
            while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) {
                ++ia;
            }
            while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) {
                ++jb;
            }
            std::string_view run_a = a.substr(i, ia - i);
            std::string_view run_b = b.substr(j, jb - j);
            std::string_view num_a = run_a.substr(run_a.find_first_not_of('0') ==
                                                          std::string_view::npos
                                                      ? run_a.size() - 1
                                                      : run_a.find_first_not_of('0'));
            std::string_view num_b = run_b.substr(run_b.find_first_not_of('0') ==
                                                          std::string_view::npos
                                                      ? run_b.size() - 1
                                                      : run_b.find_first_not_of('0'));
            if (num_a.size() != num_b.size()) {
                return num_a.size() < num_b.size() ? -1 : 1;
            }
            if (const int c = num_a.compare(num_b); c != 0) {
                return c < 0 ? -1 : 1;
            }
            if (run_a != run_b) { // same value, different zero padding
                return run_a < run_b ? -1 : 1;
            }
            i = ia;
            j = jb;
            continue;
        }
        if (a[i] != b[j]) {
            return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
        }
        ++i;
        ++j;
    }
    const std::size_t rest_a = a.size() - i;
    const std::size_t rest_b = b.size() - j;
    if (rest_a != rest_b) {
        return rest_a < rest_b ? -1 : 1;
    }
    return 0;
}

bool natural_tuple_less(std::span<const std::string> a,
                        std::span<const std::string> b) noexcept {
    const std::size_t len = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (const int c = natural_compare(a[i], b[i]); c != 0) {
            return c < 0;
        }
    }
    return a.size() < b.size();
}

} // namespace epik::io
