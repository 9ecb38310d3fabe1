#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyclepat/permutation.hpp"
#include "oracles.hpp"

using namespace cyclepat;

namespace {
Permutation P(const std::string& s) { return Permutation::parse(s); }
}

TEST_CASE("parsing and serialization mirror each other") {
    CHECK(P("529614738").one_line() == std::vector<int>{5, 2, 9, 6, 1, 4, 7, 3, 8});
    CHECK(P("529614738").to_string() == "529614738");
    CHECK(P("(1,5)(2)(3,9,8)(4,6)(7)") == P("529614738"));
    CHECK(P("529614738").cycle_string() == "(1,5)(2)(3,9,8)(4,6)(7)");
    CHECK(P("11 10 9 7 4 3 5 2 6 8 12 1").size() == 12);
    CHECK(P("11 10 9 7 4 3 5 2 6 8 12 1").to_string() == "11 10 9 7 4 3 5 2 6 8 12 1");
    CHECK(P("") == Permutation());
    CHECK(Permutation().to_string() == "");
    CHECK_THROWS_AS(P("122"), std::invalid_argument);
    CHECK_THROWS_AS(P("(1,2)(2,3)"), std::invalid_argument);
    CHECK_THROWS_AS(P("(1,3)"), std::invalid_argument);  // 2 uncovered
    CHECK_THROWS_AS(P("130"), std::invalid_argument);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = trial % 16;
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        std::shuffle(w.begin(), w.end(), rng);
        Permutation p(w);
        CHECK(Permutation::parse(p.to_string()) == p);
        if (n > 0) CHECK(Permutation::parse(p.cycle_string()) == p);
    }
}

TEST_CASE("decompose matches the worked cycle forms") {
    auto d = decompose(P("529614738"));
    CHECK(d.cycles == std::vector<std::vector<int>>{{1, 5}, {2}, {3, 9, 8}, {4, 6}, {7}});
    CHECK(decompose(P("123")).cycles == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(P("7615423").cycle_string() == "(1,7,3)(2,6)(4,5)");
}

TEST_CASE("decompose / compose round trip, exhaustive n <= 8") {
    std::vector<int> w;
    for (int n = 0; n <= 8; ++n) {
        w.resize(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        do {
            Permutation p(w);
            CHECK(compose_cycles(n, decompose(p).cycles) == p);
        } while (std::next_permutation(w.begin(), w.end()));
    }
}

TEST_CASE("cycle_counts") {
    CycleCounts expect{{1, 2}, {2, 2}, {3, 1}};
    CHECK(cycle_counts(P("529614738")) == expect);
    CHECK(cycle_counts(Permutation()).empty());
    CHECK(cycle_counts(P("231")) == CycleCounts{{3, 1}});
}

TEST_CASE("pattern containment on the paper examples") {
    CHECK(contains_pattern(P("2371645"), P("132")));
    // standardization of the 321-avoiding example word (which repeats a letter)
    CHECK_FALSE(contains_pattern(P("25163784"), P("321")));
    CHECK(contains_pattern(P("2371645"), Permutation()));
    CHECK(contains_pattern(Permutation(), Permutation()));
    CHECK_FALSE(contains_pattern(Permutation(), P("1")));
}

TEST_CASE("containment agrees with the all-subsequences oracle, n <= 8, |q| = 3") {
    std::vector<Permutation> patterns;
    std::vector<int> q{1, 2, 3};
    do patterns.push_back(Permutation(q));
    while (std::next_permutation(q.begin(), q.end()));
    std::vector<int> w;
    for (int n = 0; n <= 8; ++n) {
        w.resize(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        do {
            Permutation p(w);
            for (const auto& patt : patterns) {
                if (contains_pattern(p, patt) != oracles::naive_contains(w, patt.one_line())) {
                    CAPTURE(p.to_string());
                    CAPTURE(patt.to_string());
                    CHECK(false);
                }
            }
        } while (std::next_permutation(w.begin(), w.end()));
    }
}

TEST_CASE("longer patterns take the general search") {
    CHECK(contains_pattern(P("52341"), P("2341")));
    CHECK_FALSE(contains_pattern(P("54321"), P("1234")));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + trial % 5;
        std::vector<int> w(n), q(4);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        for (int i = 0; i < 4; ++i) q[i] = i + 1;
        std::shuffle(w.begin(), w.end(), rng);
        std::shuffle(q.begin(), q.end(), rng);
        CHECK(contains_pattern(Permutation(w), Permutation(q)) == oracles::naive_contains(w, q));
    }
}

TEST_CASE("symmetries") {
    CHECK(apply_symmetry(P("231"), Symmetry::inverse) == P("312"));
    CHECK(apply_symmetry(P("132"), Symmetry::reverse_complement) == P("213"));
    CHECK(apply_symmetry(P("2371645"), Symmetry::identity) == P("2371645"));

    // cycle type preserved by all four, exhaustive n <= 7
    std::vector<int> w;
    for (int n = 1; n <= 7; ++n) {
        w.resize(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        do {
            Permutation p(w);
            auto counts = cycle_counts(p);
            for (auto sym : {Symmetry::identity, Symmetry::inverse, Symmetry::reverse_complement,
                             Symmetry::reverse_complement_inverse})
                CHECK(cycle_counts(apply_symmetry(p, sym)) == counts);
        } while (std::next_permutation(w.begin(), w.end()));
    }
}

TEST_CASE("arc diagrams") {
    auto d = arc_diagram(P("529614738"));
    CHECK(d.n == 9);
    CHECK(d.arcs == std::vector<std::pair<int, int>>{{1, 5}, {3, 8}, {4, 6}, {8, 9}});
    CHECK(arc_diagram(Permutation::identity(4)).arcs.empty());
    auto d2 = arc_diagram(P("7615423"));
    CHECK(d2.arcs == std::vector<std::pair<int, int>>{{1, 3}, {2, 6}, {3, 7}, {4, 5}});
}

TEST_CASE("3-cycle forms") {
    CHECK(form_of_3cycle(std::vector<int>{3, 9, 8}) == CycleForm3::form_132);
    CHECK(form_of_3cycle(std::vector<int>{1, 2, 3}) == CycleForm3::form_123);
    CHECK(form_of_3cycle(std::vector<int>{2, 10, 8}) == CycleForm3::form_132);
    CHECK(form_of_3cycle(std::vector<int>{9, 8, 3}) == CycleForm3::form_132);  // rotation invariant
    CHECK_THROWS_AS(form_of_3cycle(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(form_of_3cycle(std::vector<int>{1, 2, 2}), std::invalid_argument);
}
