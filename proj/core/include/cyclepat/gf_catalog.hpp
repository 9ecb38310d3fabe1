#pragma once

#include <set>
#include <string>

#include "cyclepat/series.hpp"
#include "cyclepat/trivariate.hpp"

namespace cyclepat {

/// c(x) = (1 - sqrt(1-4x)) / (2x); coefficients are the Catalan numbers.
TruncatedSeries catalan_series(int order);

/// m(t,x) = 2 / (1 - 2tx + x + sqrt(1-2x-3x^2)): coefficient of t^j x^k counts
/// Motzkin paths of length k with j flats at level zero.
BivariateSeries motzkin_flats(int x_order, int t_order);

/// m(1,x): the Motzkin numbers.
TruncatedSeries motzkin_series(int order);

/// The four building blocks of the 231 count: involutions i(t,x), crossing
/// families against 2-cycles s(x,y), against fixed points q(t,y), and against
/// both r(t,x,y).
struct Components231 {
    WeightedSeries3 i, s, q, r;
};
Components231 components_231(int bound);

WeightedSeries3 b231_closed(int bound);
WeightedSeries3 b231_structural(int bound);
/// Builds both routes and insists on exact agreement.
WeightedSeries3 b231(int bound);

/// Numerator/denominator polynomial pair of B(t,x,y) specialized to the subset
/// S (t -> z, x -> z^2, y -> z^3, switched off outside S), as univariate
/// polynomials of z packed into series of the given order.
std::pair<TruncatedSeries, TruncatedSeries> a231_subset_rational(const std::set<int>& S, int order);

/// The per-subset closed forms as tabulated (independent polynomial pairs).
std::pair<TruncatedSeries, TruncatedSeries> a231_table_rational(const std::set<int>& S, int order);

/// A^S_231: expands both rational routes and insists on exact agreement.
TruncatedSeries a231_subset(const std::set<int>& S, int order);

/// A^{3}_132 = 2(c(z^3)-1) m(2, c(z^3)-1), with the constant term set to 1 for
/// the empty permutation (the printed product starts at z^3).
TruncatedSeries a3_132(int order);

TruncatedSeries a13_132_closed(int order);
TruncatedSeries a13_132_structural(int order);
/// Both forms, exact agreement required.
TruncatedSeries a13_132(int order);

/// (a_{n+3} / a_n)^{1/3} as a rational with `digits` decimal digits carried;
/// the period-3 ratio smooths the z^3-induced oscillation. Throws if either
/// coefficient is zero.
Rational growth_estimate(const TruncatedSeries& s, int n, int digits = 60);

}  // namespace cyclepat
