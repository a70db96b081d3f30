#include "epik/stats.hpp"

#include "epik/error.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

using namespace epik;

namespace {

ContingencyTable make_ct(std::vector<std::uint32_t> cases, std::vector<std::uint32_t> controls) {
    ContingencyTable ct;
    ct.case_counts = std::move(cases);
    ct.control_counts = std::move(controls);
    return ct;
}

ContingencyTable random_ct(std::uint64_t seed, std::size_t rows, std::uint32_t max_cell) {
    Xoshiro256pp rng(seed);
    ContingencyTable ct;
    ct.case_counts.resize(rows);
    ct.control_counts.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        ct.case_counts[r] = static_cast<std::uint32_t>(rng.bounded(max_cell));
        ct.control_counts[r] = static_cast<std::uint32_t>(rng.bounded(max_cell));
    }
    ct.case_counts[0] += 1; // never fully empty
    return ct;
}

} // namespace

TEST_CASE("entropy matches hand values") {
    const std::vector<std::uint32_t> deterministic{8, 0, 0};
    CHECK(entropy(deterministic, 8) == doctest::Approx(0.0).epsilon(1e-15));

    const std::vector<std::uint32_t> uniform{4, 4};
    CHECK(std::abs(entropy(uniform, 8) - std::log(2.0)) < 1e-15);

    // golden value frozen from an extended-precision evaluation
    const std::vector<std::uint32_t> pooled{8, 3, 6};
    CHECK(std::abs(entropy(pooled, 17) - 1.028394166714372168) < 1e-12);
}

TEST_CASE("entropy rejects totals that do not match") {
    const std::vector<std::uint32_t> counts{4, 4};
    CHECK_THROWS_AS(entropy(counts, 9), InconsistentCountsError);
    CHECK_THROWS_AS(entropy(std::vector<std::uint32_t>{}, 0), InconsistentCountsError);
}

TEST_CASE("mutual information matches the extended-precision value") {
    // golden value frozen from an extended-precision evaluation
    const ContingencyTable ct = make_ct({4, 1, 3}, {4, 2, 3});
    CHECK(std::abs(mutual_information(ct) - 0.008262958045137570937) < 1e-12);

    std::vector<std::uint64_t> c64{4, 1, 3};
    std::vector<std::uint64_t> d64{4, 2, 3};
    CHECK(std::abs(mutual_information(ct) -
                   static_cast<double>(epik::testing::oracle_mi(c64, d64))) < 1e-12);
}

TEST_CASE("row-identical classes are independent: MI == 0") {
    const ContingencyTable ct = make_ct({3, 2, 1}, {3, 2, 1});
    const double mi = mutual_information(ct);
    CHECK(mi >= 0.0);
    CHECK(mi < 1e-12);
}

TEST_CASE("perfect balanced separation scores ln 2") {
    const ContingencyTable ct = make_ct({12, 0, 0}, {0, 12, 0});
    CHECK(std::abs(mutual_information(ct) - std::log(2.0)) < 1e-12);
}

TEST_CASE("empty table is an error") {
    const ContingencyTable ct = make_ct({0, 0, 0}, {0, 0, 0});
    CHECK_THROWS_AS(mutual_information(ct), EmptyTableError);
}

TEST_CASE("MI is bounded by both marginal entropies") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ContingencyTable ct = random_ct(seed, 9, 40);
        std::vector<std::uint32_t> rows(ct.rows());
        std::uint64_t cases = 0;
        std::uint64_t controls = 0;
        for (std::size_t r = 0; r < ct.rows(); ++r) {
            rows[r] = ct.case_counts[r] + ct.control_counts[r];
            cases += ct.case_counts[r];
            controls += ct.control_counts[r];
        }
        const std::uint64_t m = cases + controls;
        const std::vector<std::uint32_t> classes{static_cast<std::uint32_t>(cases),
                                                 static_cast<std::uint32_t>(controls)};
        const double mi = mutual_information(ct);
        CHECK(mi <= entropy(rows, m) + 1e-12);
        CHECK(mi <= entropy(classes, m) + 1e-12);
    }
}

TEST_CASE("MI is symmetric in the two phenotype classes") {
    for (std::uint64_t seed = 300; seed < 340; ++seed) {
        const ContingencyTable ct = random_ct(seed, 27, 25);
        ContingencyTable swapped;
        swapped.case_counts = ct.control_counts;
        swapped.control_counts = ct.case_counts;
        CHECK(mutual_information(ct) == mutual_information(swapped));
    }
}

TEST_CASE("scaling every cell by a constant leaves MI unchanged") {
    for (std::uint64_t seed = 400; seed < 430; ++seed) {
        const ContingencyTable ct = random_ct(seed, 9, 30);
        ContingencyTable scaled = ct;
        for (auto& c : scaled.case_counts) {
            c *= 7;
        }
        for (auto& c : scaled.control_counts) {
            c *= 7;
        }
        CHECK(std::abs(mutual_information(ct) - mutual_information(scaled)) < 1e-12);
    }
}

TEST_CASE("rankings do not depend on the logarithm base") {
    // log2-based scoring computed independently, then both argsorted.
    const auto mi_log2 = [](const ContingencyTable& ct) {
        std::uint64_t cases = 0;
        std::uint64_t controls = 0;
        double hx = 0.0;
        double hxy = 0.0;
        std::uint64_t m = 0;
        for (std::size_t r = 0; r < ct.rows(); ++r) {
            m += ct.case_counts[r];
            m += ct.control_counts[r];
        }
        const auto term = [m](std::uint64_t c) {
            if (c == 0) {
                return 0.0;
            }
            const double p = static_cast<double>(c) / static_cast<double>(m);
            return -p * std::log2(p);
        };
        for (std::size_t r = 0; r < ct.rows(); ++r) {
            cases += ct.case_counts[r];
            controls += ct.control_counts[r];
            hx += term(static_cast<std::uint64_t>(ct.case_counts[r]) + ct.control_counts[r]);
            hxy += term(ct.case_counts[r]) + term(ct.control_counts[r]);
        }
        return hx + term(cases) + term(controls) - hxy;
    };

    std::vector<ContingencyTable> tables;
    for (std::uint64_t seed = 500; seed < 560; ++seed) {
        tables.push_back(random_ct(seed, 9, 50));
    }
    std::vector<std::size_t> order_nats(tables.size());
    std::vector<std::size_t> order_log2(tables.size());
    std::iota(order_nats.begin(), order_nats.end(), 0U);
    std::iota(order_log2.begin(), order_log2.end(), 0U);
    std::stable_sort(order_nats.begin(), order_nats.end(), [&](std::size_t a, std::size_t b) {
        return mutual_information(tables[a]) > mutual_information(tables[b]);
    });
    std::stable_sort(order_log2.begin(), order_log2.end(), [&](std::size_t a, std::size_t b) {
        return mi_log2(tables[a]) > mi_log2(tables[b]);
    });
    CHECK(order_nats == order_log2);
}
