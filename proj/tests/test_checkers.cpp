#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "cyclepat/checkers.hpp"
#include "cyclepat/enumerate.hpp"

using namespace cyclepat;

namespace {
Permutation P(const std::string& s) { return Permutation::parse(s); }
std::vector<int> V(std::initializer_list<int> v) { return v; }
}

TEST_CASE("2-cycle pair classification") {
    CHECK(classify_2cycle_pair({1, 2}, {3, 4}) == PairConfig231::disjoint);
    CHECK(classify_2cycle_pair({1, 4}, {2, 3}) == PairConfig231::nested);
    CHECK(classify_2cycle_pair({1, 3}, {2, 4}) == PairConfig231::crossing);
    CHECK(classify_2cycle_pair({2, 3}, {1, 4}) == PairConfig231::nested);  // order-insensitive
    CHECK_THROWS_AS(classify_2cycle_pair({1, 2}, {2, 3}), std::invalid_argument);
}

TEST_CASE("3-cycle pair classification in 231-avoiders") {
    // cycles written (a,c,b): supports {1,2,3} and {4,5,6}
    CHECK(classify_3cycle_pair_231(V({1, 3, 2}), V({4, 6, 5})) == PairConfig231::separated);
    // supports {1,4,6} / {2,3,5}: the lemma's second pictured configuration
    CHECK(classify_3cycle_pair_231(V({1, 6, 4}), V({2, 5, 3})) == PairConfig231::cross_type_1);
    // supports {1,3,6} / {2,4,5}: the third pictured configuration
    CHECK(classify_3cycle_pair_231(V({1, 6, 3}), V({2, 5, 4})) == PairConfig231::cross_type_2);
    // a (1,2,3)-form cycle violates the precondition
    CHECK_THROWS_AS(classify_3cycle_pair_231(V({1, 2, 3}), V({4, 6, 5})), std::invalid_argument);
    CHECK_THROWS_AS(classify_3cycle_pair_231(V({1, 3, 2}), V({3, 5, 4})), std::invalid_argument);
}

TEST_CASE("3-arc pair classification in 132-avoiders") {
    CHECK(classify_3arc_pair_132({1, 3, 5}, {2, 4, 6}) == PairConfig132::config_a);
    CHECK(classify_3arc_pair_132({1, 4, 6}, {2, 3, 5}) == PairConfig132::config_b);
    CHECK(classify_3arc_pair_132({1, 5, 6}, {2, 3, 4}) == PairConfig132::config_c);
    CHECK(classify_3arc_pair_132({1, 2, 3}, {4, 5, 6}) == PairConfig132::other);
    CHECK(classify_3arc_pair_132({2, 3, 4}, {1, 5, 6}) == PairConfig132::config_c);
    CHECK_THROWS_AS(classify_3arc_pair_132({1, 2, 3}, {3, 4, 5}), std::invalid_argument);
}

TEST_CASE("exhaustive two-3-cycle configuration audit") {
    // all ways to choose the support of the cycle containing 1, times 4 form
    // assignments; count the 6-element permutations avoiding each pattern
    const Permutation patt231 = P("231"), patt132 = P("132");
    int avoid231 = 0, avoid132 = 0;
    std::set<PairConfig231> seen231;
    std::set<std::pair<PairConfig132, bool>> seen132;  // (config, mixed forms?)
    std::vector<int> elems{2, 3, 4, 5, 6};
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<int> s1{1}, s2;
        for (int b = 0; b < 5; ++b) (mask & (1 << b) ? s1 : s2).push_back(elems[b]);
        if (s1.size() != 3) continue;
        for (int f1 = 0; f1 < 2; ++f1)
            for (int f2 = 0; f2 < 2; ++f2) {
                auto orient = [](const std::vector<int>& s, bool form123) {
                    return form123 ? s : std::vector<int>{s[0], s[2], s[1]};
                };
                Permutation p = compose_cycles(6, {orient(s1, f1), orient(s2, f2)});
                if (!contains_pattern(p, patt231)) {
                    ++avoid231;
                    seen231.insert(classify_3cycle_pair_231(orient(s1, f1), orient(s2, f2)));
                }
                if (!contains_pattern(p, patt132)) {
                    ++avoid132;
                    std::array<int, 3> a1{s1[0], s1[1], s1[2]}, a2{s2[0], s2[1], s2[2]};
                    seen132.insert({classify_3arc_pair_132(a1, a2), f1 != f2});
                }
            }
    }
    // 231: only the three all-(a,c,b) configurations survive
    CHECK(avoid231 == 3);
    CHECK(seen231 == std::set<PairConfig231>{PairConfig231::separated, PairConfig231::cross_type_1,
                                             PairConfig231::cross_type_2});
    // 132: configurations A,B,C with equal forms, plus C with mixed forms
    CHECK(avoid132 == 8);
    CHECK(seen132 == std::set<std::pair<PairConfig132, bool>>{
                         {PairConfig132::config_a, false},
                         {PairConfig132::config_b, false},
                         {PairConfig132::config_c, false},
                         {PairConfig132::config_c, true}});
}

TEST_CASE("check_231_family_lemmas") {
    CHECK(check_231_family_lemmas(P("7615423")).pass());  // the paper's nest example
    CHECK(check_231_family_lemmas(Permutation::identity(5)).pass());
    CHECK_THROWS_AS(check_231_family_lemmas(P("231")), std::invalid_argument);
    CHECK_THROWS_AS(check_231_family_lemmas(P("2341")), std::invalid_argument);  // a 4-cycle

    long violations = 0, checked = 0;
    const Permutation patt = P("231");
    for (int n = 0; n <= 7; ++n)
        for_each_cycle_constrained(n, {1, 2, 3}, [&](const Permutation& p) {
            if (contains_pattern(p, patt)) return;
            ++checked;
            violations += check_231_family_lemmas(p).violations.size();
        });
    CHECK(checked == 292);  // 1+1+2+5+12+29+71+171 avoiders across n = 0..7
    CHECK(violations == 0);
}

TEST_CASE("check_132_structure") {
    CHECK(check_132_structure(P("11 10 9 7 4 3 5 2 6 8 12 1")).pass());
    CHECK(check_132_structure(P("231")).pass());
    CHECK(check_132_structure(Permutation::identity(4)).pass());
    CHECK_THROWS_AS(check_132_structure(P("132")), std::invalid_argument);
    CHECK_THROWS_AS(check_132_structure(P("21")), std::invalid_argument);  // a 2-cycle

    long violations = 0, checked = 0;
    const Permutation patt = P("132");
    for (int n = 0; n <= 8; ++n)
        for_each_cycle_constrained(n, {1, 3}, [&](const Permutation& p) {
            if (contains_pattern(p, patt)) return;
            ++checked;
            violations += check_132_structure(p).violations.size();
        });
    CHECK(checked == 115);  // 1+1+1+3+5+7+17+31+49 avoiders across n = 0..8
    CHECK(violations == 0);
}

TEST_CASE("report json carries the violating witnesses") {
    auto rep = check_231_family_lemmas(P("7615423"));
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j.at("permutation") == "7615423");
    CHECK(j.at("violations").is_array());
    CHECK(j.at("violations").empty());

    CheckReport synthetic;
    synthetic.permutation = "4231";
    synthetic.violations.push_back({"2-cycles-cannot-cross", {1, 3, 2, 4}});
    auto js = nlohmann::json::parse(synthetic.to_json());
    CHECK(js.at("violations")[0].at("lemma") == "2-cycles-cannot-cross");
    CHECK(js.at("violations")[0].at("witness") == std::vector<int>({1, 3, 2, 4}));
}
