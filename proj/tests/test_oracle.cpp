#include "oracle.hpp"

#include "epik/genotype_table.hpp"
#include "test_util.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using epik::testing::RawDataset;
using epik::testing::oracle_contingency;
using epik::testing::oracle_mi;
using epik::testing::oracle_search;
using epik::testing::random_raw;

TEST_CASE("oracle enumerates all combinations in sorted order") {
    const RawDataset raw = random_raw(10, 8, 30, 30);
    const auto scored = oracle_search(raw, 4);
    CHECK(scored.size() == 70);
    // ranking happens at double resolution, ties by ascending combination
    for (std::size_t i = 1; i < scored.size(); ++i) {
        const double prev = static_cast<double>(scored[i - 1].mi);
        const double cur = static_cast<double>(scored[i].mi);
        const bool ordered =
            prev > cur || (prev == cur && scored[i - 1].combination < scored[i].combination);
        CHECK(ordered);
    }
}

TEST_CASE("oracle contingency matches the worked 16-sample example") {
    // variant a then b, cases and controls as in the fixture files
    RawDataset raw;
    raw.case_genotypes = {{1, 2, 0, 2, 0, 0, 2, 0}, {0, 0, 2, 0, 2, 1, 1, 2}};
    raw.control_genotypes = {{0, 1, 0, 2, 0, 2, 1, 0}, {2, 2, 1, 0, 2, 0, 1, 0}};
    std::vector<std::uint64_t> cases;
    std::vector<std::uint64_t> controls;
    const std::vector<std::uint32_t> combo{0, 1};
    oracle_contingency(raw, combo, cases, controls);
    CHECK(cases == std::vector<std::uint64_t>{0, 1, 3, 1, 0, 0, 2, 1, 0});
    CHECK(controls == std::vector<std::uint64_t>{1, 1, 2, 0, 1, 1, 2, 0, 0});
}

TEST_CASE("oracle counting agrees with the bit kernel on random pairs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const RawDataset raw = random_raw(7000 + seed, 4, 20 + seed % 60, 25 + seed % 40);
        const epik::Dataset ds = epik::testing::to_dataset(raw);
        const std::uint32_t v1 = seed % 4;
        const std::uint32_t v2 = (v1 + 1 + seed % 3) % 4;
        const std::vector<std::uint32_t> combo{std::min(v1, v2), std::max(v1, v2)};
        if (combo[0] == combo[1]) {
            continue;
        }
        std::vector<std::uint64_t> cases;
        std::vector<std::uint64_t> controls;
        oracle_contingency(raw, combo, cases, controls);
        const epik::ContingencyTable ct =
            epik::GenotypeTable::combine_and_popcount(ds.table(combo[0]), ds.table(combo[1]));
        REQUIRE(ct.rows() == cases.size());
        for (std::size_t r = 0; r < cases.size(); ++r) {
            CHECK(cases[r] == ct.case_counts[r]);
            CHECK(controls[r] == ct.control_counts[r]);
        }
    }
}

TEST_CASE("oracle refuses to run above its guard") {
    const RawDataset raw = random_raw(11, 40, 10, 10);
    CHECK_THROWS_AS(oracle_search(raw, 20, 1000), std::runtime_error);
}

TEST_CASE("oracle mi agrees with analytic cases") {
    const std::vector<std::uint64_t> a{4, 4};
    const std::vector<std::uint64_t> b{0, 0};
    // all cases in row 0, all controls in row 1: MI = H(Y) = ln 2
    const std::vector<std::uint64_t> c1{6, 0};
    const std::vector<std::uint64_t> c2{0, 6};
    CHECK(std::abs(static_cast<double>(oracle_mi(c1, c2)) - std::log(2.0)) < 1e-15);
}
