#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclepat/gf_catalog.hpp"
#include "cyclepat/lattice.hpp"
#include "oracles.hpp"

using namespace cyclepat;

namespace {
std::vector<long> heads(const TruncatedSeries& s, int upto) {
    std::vector<long> out;
    for (int i = 0; i <= upto; ++i) {
        REQUIRE(denominator(s[i]) == 1);
        out.push_back(static_cast<long>(numerator(s[i])));
    }
    return out;
}
}

TEST_CASE("catalan series against the recurrence") {
    auto c = catalan_series(20);
    auto table = oracles::catalan_table(20);
    for (int i = 0; i <= 20; ++i) CHECK(Rational(table[i]) == c[i]);
    CHECK(heads(c, 5) == std::vector<long>{1, 1, 2, 5, 14, 42});
}

TEST_CASE("motzkin flats bivariate") {
    auto m = motzkin_flats(12, 12);
    CHECK(m.coeff(1, 1) == 1);  // the single path "f"
    CHECK(m.coeff(1, 0) == 0);
    CHECK(m.coeff(2, 0) == 1);  // "ud"
    CHECK(m.coeff(2, 2) == 1);  // "ff"
    CHECK(heads(motzkin_series(6), 6) == std::vector<long>{1, 1, 2, 4, 9, 21, 51});
    for (int k = 0; k <= 12; ++k)
        for (int j = 0; j <= 12; ++j) CHECK(m.coeff(k, j) == Rational(motzkin_flat_count(k, j)));
}

TEST_CASE("231 component series") {
    auto comp = components_231(10);
    CHECK(comp.i.coeff(0, 1, 0) == 1);
    CHECK(comp.i.coeff(0, 2, 0) == 2);
    CHECK(comp.i.coeff(0, 3, 0) == 4);
    CHECK(comp.s.coeff(0, 1, 1) == 3);
    CHECK(comp.q.coeff(0, 0, 1) == 1);
    CHECK(comp.q.coeff(1, 0, 1) == 2);
    CHECK(comp.q.coeff(2, 0, 1) == 1);
    CHECK(comp.q.coeff(0, 0, 2) == 2);
    CHECK(comp.r.coeff(1, 1, 1) == 6);
}

TEST_CASE("B(t,x,y): both routes and the table specializations") {
    auto closed = b231_closed(12);
    CHECK(closed == b231_structural(12));
    CHECK_NOTHROW(b231(12));
    CHECK(heads(closed.specialize(true, true, true), 12) ==
          std::vector<long>{1, 1, 2, 5, 12, 29, 71, 171, 411, 990, 2380, 5722, 13765});
    CHECK(heads(closed.specialize(false, false, true), 12) ==
          std::vector<long>{1, 0, 0, 1, 0, 0, 3, 0, 0, 9, 0, 0, 27});
    CHECK(heads(closed.specialize(true, false, true), 12) ==
          std::vector<long>{1, 1, 1, 2, 5, 9, 16, 32, 61, 114, 219, 418, 792});
}

TEST_CASE("A^S_231 closed forms") {
    CHECK(heads(a231_subset({2, 3}, 12), 12) ==
          std::vector<long>{1, 0, 1, 1, 2, 5, 7, 17, 27, 57, 98, 193, 351});
    CHECK(heads(a231_subset({1}, 8), 8) == std::vector<long>{1, 1, 1, 1, 1, 1, 1, 1, 1});
    auto doubling = a231_subset({1, 2}, 12);
    for (int n = 1; n <= 12; ++n) CHECK(doubling[n] == Rational(Int(1) << (n - 1)));
    CHECK_THROWS_AS(a231_subset({}, 5), std::invalid_argument);
    CHECK_THROWS_AS(a231_subset({4}, 5), std::invalid_argument);
}

TEST_CASE("A^{3}_132 with the empty-permutation adjustment") {
    auto a3 = a3_132(12);
    CHECK(a3[0] == 1);
    CHECK(a3[1] == 0);
    CHECK(a3[2] == 0);
    CHECK(a3[3] == 2);
    CHECK(a3[4] == 0);
    CHECK(a3[6] == 8);   // brute force over S_6
    CHECK(a3[9] == 36);  // brute force over S_9
    CHECK(a3[12] == 170);
}

TEST_CASE("A^{1,3}_132: both printed forms and Table 2 row 132") {
    auto closed = a13_132_closed(30);
    CHECK(closed == a13_132_structural(30));
    CHECK_NOTHROW(a13_132(30));
    CHECK(heads(closed, 12) == std::vector<long>{1, 1, 1, 3, 5, 7, 17, 31, 49, 107, 201, 339, 699});
}

TEST_CASE("growth estimate") {
    auto geometric = TruncatedSeries::constant(20, 1) / TruncatedSeries::from_ints(20, {1, -2});
    CHECK(growth_estimate(geometric, 5) == 2);
    auto row12 = a231_subset({1, 2}, 20);
    CHECK(growth_estimate(row12, 9) == 2);
    CHECK_THROWS_AS(growth_estimate(a3_132(12), 1), std::domain_error);  // zero coefficients
    CHECK_THROWS_AS(growth_estimate(geometric, 18), std::invalid_argument);
}
