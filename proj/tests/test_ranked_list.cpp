#include "epik/ranked_list.hpp"

#include "doctest.h"

#include <stdexcept>
#include <vector>

using namespace epik;

namespace {

std::vector<double> scores(const RankedList& list) {
    std::vector<double> out;
    for (const auto& e : list.entries()) {
        out.push_back(e.mi);
    }
    return out;
}

} // namespace

TEST_CASE("inserting below capacity always admits") {
    RankedList list(3);
    CHECK(list.insert(std::vector<std::uint32_t>{0, 1}, 0.5));
    CHECK(scores(list) == std::vector<double>{0.5});
}

TEST_CASE("zero capacity is rejected") {
    CHECK_THROWS_AS(RankedList(0), std::invalid_argument);
}

TEST_CASE("a full list rejects candidates that do not beat the minimum") {
    RankedList list(3);
    list.insert(std::vector<std::uint32_t>{0, 1}, 0.2);
    list.insert(std::vector<std::uint32_t>{0, 2}, 0.4);
    list.insert(std::vector<std::uint32_t>{0, 3}, 0.9);
    CHECK_FALSE(list.insert(std::vector<std::uint32_t>{0, 4}, 0.1));
    CHECK(scores(list) == std::vector<double>{0.2, 0.4, 0.9});
    // ties with the minimum are also rejected
    CHECK_FALSE(list.insert(std::vector<std::uint32_t>{0, 0}, 0.2));
    CHECK(scores(list) == std::vector<double>{0.2, 0.4, 0.9});
}

TEST_CASE("admitting into a full list evicts the previous minimum") {
    RankedList list(3);
    list.insert(std::vector<std::uint32_t>{0, 1}, 0.2);
    list.insert(std::vector<std::uint32_t>{0, 2}, 0.4);
    list.insert(std::vector<std::uint32_t>{0, 3}, 0.9);
    CHECK(list.insert(std::vector<std::uint32_t>{0, 4}, 0.3));
    CHECK(scores(list) == std::vector<double>{0.3, 0.4, 0.9});
}

TEST_CASE("equal scores keep the lexicographically smaller combination longest") {
    RankedList list(3);
    list.insert(std::vector<std::uint32_t>{2, 5}, 0.7);
    list.insert(std::vector<std::uint32_t>{1, 3}, 0.7);
    list.insert(std::vector<std::uint32_t>{1, 9}, 0.7);
    // worst-first internal order: ties sorted by descending combination
    CHECK(list.entries()[0].combination == std::vector<std::uint32_t>{2, 5});
    CHECK(list.entries()[1].combination == std::vector<std::uint32_t>{1, 9});
    CHECK(list.entries()[2].combination == std::vector<std::uint32_t>{1, 3});

    // a better candidate evicts the tied entry with the largest combination
    CHECK(list.insert(std::vector<std::uint32_t>{0, 2}, 0.8));
    CHECK(list.size() == 3);
    CHECK(list.entries()[0].combination == std::vector<std::uint32_t>{1, 9});

    const auto ranked = list.ranked();
    CHECK(ranked.front().combination == std::vector<std::uint32_t>{0, 2});
    CHECK(ranked[1].combination == std::vector<std::uint32_t>{1, 3});
    CHECK(ranked[2].combination == std::vector<std::uint32_t>{1, 9});
}

TEST_CASE("ranked() reverses into descending score order") {
    RankedList list(5);
    list.insert(std::vector<std::uint32_t>{0, 1}, 0.4);
    list.insert(std::vector<std::uint32_t>{0, 2}, 0.1);
    list.insert(std::vector<std::uint32_t>{0, 3}, 0.8);
    const auto ranked = list.ranked();
    CHECK(ranked[0].mi == 0.8);
    CHECK(ranked[1].mi == 0.4);
    CHECK(ranked[2].mi == 0.1);
}
