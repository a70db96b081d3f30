#pragma once

#include "epik/dataset.hpp"
#include "epik/io.hpp"
#include "epik/prng.hpp"
#include "oracle.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace epik::testing {

// Parses a figure-style bit string, leftmost character = sample 0 = bit 0.
inline std::uint64_t bits_from_string(std::string_view s) {
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            word |= std::uint64_t{1} << i;
        }
    }
    return word;
}

inline RawDataset to_raw(const io::SampleMatrix& data) {
    RawDataset raw;
    const std::size_t n = data.variant_ids.size();
    raw.case_genotypes.resize(n);
    raw.control_genotypes.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t s = 0; s < data.phenotypes.size(); ++s) {
            (data.phenotypes[s] == 1 ? raw.case_genotypes[v] : raw.control_genotypes[v])
                .push_back(data.genotypes[v][s]);
        }
    }
    return raw;
}

inline std::vector<std::string> default_ids(std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        ids.push_back("v" + std::to_string(v));
    }
    return ids;
}

inline Dataset to_dataset(const RawDataset& raw) {
    return Dataset(default_ids(raw.num_variants()), raw.case_genotypes, raw.control_genotypes);
}

// Uniform random genotypes, independent of the io generator's model.
inline RawDataset random_raw(std::uint64_t seed, std::size_t n, std::size_t cases,
                             std::size_t controls) {
    Xoshiro256pp rng(seed);
    RawDataset raw;
    raw.case_genotypes.resize(n);
    raw.control_genotypes.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        raw.case_genotypes[v].resize(cases);
        raw.control_genotypes[v].resize(controls);
        for (auto& g : raw.case_genotypes[v]) {
            g = static_cast<std::uint8_t>(rng.bounded(3));
        }
        for (auto& g : raw.control_genotypes[v]) {
            g = static_cast<std::uint8_t>(rng.bounded(3));
        }
    }
    return raw;
}

// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                (tag + "-" + std::to_string(rd()) + "-" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path file(const std::string& name) const { return path_ / name; }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path);
    out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace epik::testing
