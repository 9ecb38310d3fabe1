#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclepat/gf_catalog.hpp"
#include "cyclepat/series.hpp"

using namespace cyclepat;

TEST_CASE("ring operations") {
    auto a = TruncatedSeries::from_ints(5, {1, 1});
    auto b = TruncatedSeries::from_ints(5, {1, -1});
    CHECK(a * b == TruncatedSeries::from_ints(5, {1, 0, -1}));
    CHECK(a + b == TruncatedSeries::from_ints(5, {2}));
    CHECK_THROWS_AS(a * TruncatedSeries::from_ints(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(a + TruncatedSeries::from_ints(6, {1}), std::invalid_argument);
}

TEST_CASE("division") {
    auto one = TruncatedSeries::constant(6, 1);
    auto geom = one / TruncatedSeries::from_ints(6, {1, -1});
    CHECK(geom == TruncatedSeries::from_ints(6, {1, 1, 1, 1, 1, 1, 1}));
    auto doubling = TruncatedSeries::from_ints(6, {1, -1}) / TruncatedSeries::from_ints(6, {1, -2});
    CHECK(doubling == TruncatedSeries::from_ints(6, {1, 1, 2, 4, 8, 16, 32}));
    auto row3 = TruncatedSeries::from_ints(9, {1, 0, 0, -2}) /
                TruncatedSeries::from_ints(9, {1, 0, 0, -3});
    CHECK(row3 == TruncatedSeries::from_ints(9, {1, 0, 0, 1, 0, 0, 3, 0, 0, 9}));
    CHECK_THROWS_AS(one / TruncatedSeries::monomial(6, 1, 1), std::domain_error);
}

TEST_CASE("square root") {
    auto s = sqrt_series(TruncatedSeries::from_ints(8, {1, -4}));
    CHECK(s.coeffs()[0] == 1);
    CHECK(s.coeffs()[1] == -2);
    CHECK(s.coeffs()[2] == -2);
    CHECK(s.coeffs()[3] == -4);
    CHECK(s.coeffs()[4] == -10);
    CHECK(s * s == TruncatedSeries::from_ints(8, {1, -4}));
    CHECK(sqrt_series(TruncatedSeries::constant(5, 1)) == TruncatedSeries::constant(5, 1));
    auto disc = TruncatedSeries::from_ints(12, {1, -2, -3});
    CHECK(sqrt_series(disc) * sqrt_series(disc) == disc);
    CHECK_THROWS_AS(sqrt_series(TruncatedSeries::constant(3, 2)), std::domain_error);
}

TEST_CASE("compose_power") {
    auto c = catalan_series(9);
    auto c3 = compose_power(c, 3);
    CHECK(c3[0] == 1);
    CHECK(c3[3] == 1);
    CHECK(c3[6] == 2);
    CHECK(c3[9] == 5);
    CHECK(c3[1] == 0);
    CHECK(compose_power(TruncatedSeries::from_ints(4, {1, 1}), 2) ==
          TruncatedSeries::from_ints(4, {1, 0, 1}));
    CHECK((c3 - TruncatedSeries::constant(9, 1))[0] == 0);
}

TEST_CASE("catalan functional equation x c^2 - c + 1 = 0") {
    auto c = catalan_series(20);
    auto x = TruncatedSeries::monomial(20, 1, 1);
    CHECK(x * c * c - c + TruncatedSeries::constant(20, 1) == TruncatedSeries(20));
}

TEST_CASE("substitution into m(t,x)") {
    auto m = motzkin_flats(8, 8);
    auto at_t1 = substitute(m, TruncatedSeries::constant(8, 1), TruncatedSeries::monomial(8, 1, 1));
    CHECK(at_t1 == TruncatedSeries::from_ints(8, {1, 1, 2, 4, 9, 21, 51, 127, 323}));
    auto at_x0 = substitute(m, TruncatedSeries::constant(8, 1), TruncatedSeries(8));
    CHECK(at_x0 == TruncatedSeries::constant(8, 1));
    CHECK_THROWS_AS(substitute(m, TruncatedSeries::constant(8, 1), TruncatedSeries::constant(8, 1)),
                    std::domain_error);
}

TEST_CASE("(a*b)/b == a for random integer series with unit constant term") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        TruncatedSeries a(30), b(30);
        a.at(0) = 1 + (trial % 3);
        b.at(0) = 1;
        for (int i = 1; i <= 30; ++i) {
            a.at(i) = coeff(rng);
            b.at(i) = coeff(rng);
        }
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("json coefficient lists") {
    CHECK(TruncatedSeries::from_ints(2, {1, 1, 2}).to_json() == "[1,1,2]");
    TruncatedSeries s(1);
    s.at(0) = Rational(1, 2);
    s.at(1) = -3;
    CHECK(s.to_json() == "[\"1/2\",-3]");
}

TEST_CASE("bivariate arithmetic sanity") {
    auto one = BivariateSeries::constant(4, 4, 1);
    auto tx = BivariateSeries::monomial(4, 4, 1, 1, 1);
    auto prod = (one + tx) * (one - tx);
    CHECK(prod.coeff(0, 0) == 1);
    CHECK(prod.coeff(1, 1) == 0);
    CHECK(prod.coeff(2, 2) == -1);
    CHECK_THROWS_AS(one / tx, std::domain_error);
}
