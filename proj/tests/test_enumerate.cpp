#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cyclepat/enumerate.hpp"
#include "cyclepat/lattice.hpp"
#include "oracles.hpp"

using namespace cyclepat;

namespace {
Permutation P(const std::string& s) { return Permutation::parse(s); }
}

TEST_CASE("generation order and contents") {
    auto s33 = generate_cycle_constrained(3, {3});
    REQUIRE(s33.size() == 2);
    CHECK(s33[0] == P("231"));  // orientation (1,2,3) first
    CHECK(s33[1] == P("312"));
    auto s2 = generate_cycle_constrained(2, {1, 2});
    REQUIRE(s2.size() == 2);
    CHECK(s2[0] == P("12"));
    CHECK(s2[1] == P("21"));
    CHECK(count_cycle_constrained(4, {1, 2, 3}) == 18);
    CHECK(generate_cycle_constrained(1, {2}).empty());
    CHECK(generate_cycle_constrained(0, {1}).size() == 1);
    CHECK_THROWS_AS(generate_cycle_constrained(4, {4}), std::invalid_argument);
    CHECK_THROWS_AS(generate_cycle_constrained(4, std::set<int>{}), std::invalid_argument);
}

TEST_CASE("stream length follows the three-term recurrence, n <= 10") {
    std::vector<Int> f{1, 1};
    for (int n = 2; n <= 10; ++n) {
        Int v = f[n - 1] + (n - 1) * f[n - 2];
        if (n >= 3) v += Int(n - 1) * (n - 2) * f[n - 3];
        f.push_back(v);
    }
    for (int n = 0; n <= 10; ++n) CHECK(count_cycle_constrained(n, {1, 2, 3}) == f[n]);
}

TEST_CASE("generation agrees with filtering S_n, n <= 6") {
    const std::vector<std::set<int>> subsets = {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    for (int n = 0; n <= 6; ++n)
        for (const auto& S : subsets) {
            auto constructed = generate_cycle_constrained(n, S);
            auto filtered = oracles::filter_generate(n, S);
            std::sort(constructed.begin(), constructed.end());
            std::sort(filtered.begin(), filtered.end());
            CHECK(constructed == filtered);
        }
}

TEST_CASE("count_avoiders on the table entries") {
    CHECK(count_avoiders(4, {1, 2, 3}, P("231")) == 12);
    CHECK(count_avoiders(6, {1, 3}, P("132")) == 17);
    CHECK(count_avoiders(9, {1, 3}, P("123")) == 0);
    CHECK(count_avoiders(0, {1}, P("132")) == 1);  // the empty permutation
    CHECK(count_avoiders(8, {1, 2}, P("231")) == 128);
}

TEST_CASE("avoider counts respect the cycle-type-preserving symmetries, n <= 7") {
    const std::vector<std::set<int>> subsets = {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    for (int n = 0; n <= 7; ++n)
        for (const auto& S : subsets) {
            CHECK(count_avoiders(n, S, P("231")) == count_avoiders(n, S, P("312")));
            CHECK(count_avoiders(n, S, P("132")) == count_avoiders(n, S, P("213")));
        }
}

TEST_CASE("refined census") {
    auto c = refined_census(3, {1, 2, 3}, P("231"));
    REQUIRE(c.table.size() == 3);
    CHECK(c.table.at({3, 0, 0}) == 1);
    CHECK(c.table.at({1, 1, 0}) == 3);
    CHECK(c.table.at({0, 0, 1}) == 1);
    CHECK(c.total() == 5);

    auto c1 = refined_census(1, {1, 2, 3}, P("231"));
    REQUIRE(c1.table.size() == 1);
    CHECK(c1.table.at({1, 0, 0}) == 1);

    CHECK(refined_census(6, {2, 3}, P("231")).total() == 7);

    for (int n = 0; n <= 7; ++n)
        CHECK(refined_census(n, {1, 2, 3}, P("231")).total() ==
              count_avoiders(n, {1, 2, 3}, P("231")));

    // census keys respect the weight identity
    for (const auto& [key, cnt] : refined_census(7, {1, 2, 3}, P("321")).table)
        CHECK(key.c1 + 2 * key.c2 + 3 * key.c3 == 7);
}

TEST_CASE("threaded runs match sequential runs") {
    for (int n : {5, 7, 8}) {
        CHECK(count_avoiders(n, {1, 2, 3}, P("231"), 1) ==
              count_avoiders(n, {1, 2, 3}, P("231"), 4));
        CHECK(refined_census(n, {1, 2, 3}, P("132"), 1) ==
              refined_census(n, {1, 2, 3}, P("132"), 3));
    }
}

TEST_CASE("census json round trip") {
    auto c = refined_census(6, {1, 2, 3}, P("231"));
    CHECK(Census::from_json(c.to_json()) == c);
    CHECK(c.to_json().find("\"pattern\":\"231\"") != std::string::npos);
    CHECK(c.to_json().find("\"count\":\"") != std::string::npos);  // counts as decimal strings
}

TEST_CASE("grouping by Dyck word") {
    auto g1 = group_by_dyck_word(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1.at("01").size() == 2);

    auto g2 = group_by_dyck_word(2);
    REQUIRE(g2.size() == 2);
    CHECK(g2.at("0011").size() == 4);  // 2^{l-1} C_2 with l = 2 hits
    CHECK(g2.at("0101").size() == 4);  // 2^{l-1} C_1 C_1 with l = 3 hits

    for (const auto& [word, group] : group_by_dyck_word(3)) {
        CHECK(Int(group.size()) == first_catalan_count(DyckWord(word)));
        for (const auto& p : group) {
            CHECK_FALSE(contains_pattern(p, P("132")));
            CHECK(cycle_counts(p) == CycleCounts{{3, p.size() / 3}});
        }
    }
}
