#include "cyclepat/gf_catalog.hpp"

#include <stdexcept>

namespace cyclepat {

TruncatedSeries catalan_series(int order) {
    // work one coefficient past the bound so the division by 2x loses nothing
    const int N = order + 1;
    TruncatedSeries arg = TruncatedSeries::from_ints(N, {1, -4});
    TruncatedSeries s = sqrt_series(arg);
    TruncatedSeries num = TruncatedSeries::constant(N, 1) - s;  // = 2x c(x)
    return num.shifted_down(1).scaled(Rational(1, 2)).truncated(order);
}

BivariateSeries motzkin_flats(int x_order, int t_order) {
    TruncatedSeries disc = sqrt_series(TruncatedSeries::from_ints(x_order, {1, -2, -3}));
    // 1 + x + sqrt(1-2x-3x^2) - 2tx
    BivariateSeries denom =
        BivariateSeries::from_x_series(TruncatedSeries::from_ints(x_order, {1, 1}) + disc, t_order) -
        BivariateSeries::monomial(x_order, t_order, 1, 1, 2);
    return BivariateSeries::constant(x_order, t_order, 2) / denom;
}

TruncatedSeries motzkin_series(int order) {
    return substitute(motzkin_flats(order, order), TruncatedSeries::constant(order, 1),
                      TruncatedSeries::monomial(order, 1, 1));
}

namespace {

WeightedSeries3 mono(int N, int i, int j, int k, long v) {
    return WeightedSeries3::monomial(N, i, j, k, v);
}

}  // namespace

Components231 components_231(int bound) {
    const int N = bound;
    const WeightedSeries3 one = WeightedSeries3::constant(N, 1);
    // i(t,x) = (1-x) / (1-t-2x)
    WeightedSeries3 i_series =
        (one - mono(N, 0, 1, 0, 1)) / (one - mono(N, 1, 0, 0, 1) - mono(N, 0, 1, 0, 2));
    // common factor y/(1-2y) and denominator (1-x)^2
    WeightedSeries3 y_fam = mono(N, 0, 0, 1, 1) / (one - mono(N, 0, 0, 1, 2));
    WeightedSeries3 one_minus_x_sq =
        (one - mono(N, 0, 1, 0, 1)) * (one - mono(N, 0, 1, 0, 1));
    // s(x,y) = y/(1-2y) * 3x/(1-x)^2
    WeightedSeries3 s_series = y_fam * (mono(N, 0, 1, 0, 3) / one_minus_x_sq);
    // q(t,y) = y(1+2t+t^2)/(1-2y)
    WeightedSeries3 q_series =
        y_fam * (one + mono(N, 1, 0, 0, 2) + mono(N, 2, 0, 0, 1));
    // r(t,x,y) = y/(1-2y) * (6xt - 2x^2 t + 2x t^2 - x^2 t^2)/(1-x)^2
    WeightedSeries3 r_num = mono(N, 1, 1, 0, 6) - mono(N, 1, 2, 0, 2) +
                            mono(N, 2, 1, 0, 2) - mono(N, 2, 2, 0, 1);
    WeightedSeries3 r_series = y_fam * (r_num / one_minus_x_sq);
    return Components231{std::move(i_series), std::move(s_series), std::move(q_series),
                         std::move(r_series)};
}

namespace {

// numerator and denominator polynomials of B(t,x,y)
WeightedSeries3 b231_numer(int N) {
    WeightedSeries3 one = WeightedSeries3::constant(N, 1);
    return (one - mono(N, 0, 1, 0, 1)) * (one - mono(N, 0, 1, 0, 1)) *
           (one - mono(N, 0, 0, 1, 2));
}

WeightedSeries3 b231_denom(int N) {
    return WeightedSeries3::constant(N, 1) - mono(N, 0, 1, 0, 3) - mono(N, 0, 0, 1, 3) -
           mono(N, 1, 0, 0, 1) + mono(N, 0, 2, 0, 2) + mono(N, 0, 1, 1, 5) +
           mono(N, 1, 1, 0, 1) - mono(N, 0, 2, 1, 5) - mono(N, 1, 1, 1, 4) -
           mono(N, 2, 0, 1, 1);
}

}  // namespace

WeightedSeries3 b231_closed(int bound) {
    return expand_rational3(b231_numer(bound), b231_denom(bound), bound);
}

WeightedSeries3 b231_structural(int bound) {
    auto [i, s, q, r] = components_231(bound);
    WeightedSeries3 one = WeightedSeries3::constant(bound, 1);
    return i / (one - i * (q + s + r));
}

WeightedSeries3 b231(int bound) {
    WeightedSeries3 closed = b231_closed(bound);
    if (closed != b231_structural(bound))
        throw std::logic_error("B(t,x,y): closed form and structural assembly disagree");
    return closed;
}

namespace {

// substitute (t,x,y) -> (z,z^2,z^3) masked by S into a polynomial given in
// trivariate form; the result is a univariate polynomial
TruncatedSeries specialize_poly(const WeightedSeries3& poly, const std::set<int>& S, int order) {
    TruncatedSeries out(order);
    const int N = poly.bound();
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + 2 * j <= N; ++j)
            for (int k = 0; i + 2 * j + 3 * k <= N; ++k) {
                const Rational& v = poly.coeff(i, j, k);
                if (v.is_zero()) continue;
                if ((i > 0 && !S.count(1)) || (j > 0 && !S.count(2)) || (k > 0 && !S.count(3)))
                    continue;
                const int d = i + 2 * j + 3 * k;
                if (d <= order) out.at(d) += v;
            }
    return out;
}

void require_subset(const std::set<int>& S) {
    if (S.empty()) throw std::invalid_argument("S must be a nonempty subset of {1,2,3}");
    for (int v : S)
        if (v < 1 || v > 3) throw std::invalid_argument("S must be a nonempty subset of {1,2,3}");
}

}  // namespace

std::pair<TruncatedSeries, TruncatedSeries> a231_subset_rational(const std::set<int>& S, int order) {
    require_subset(S);
    const int PB = 7;  // max weighted degree across the B polynomials
    return {specialize_poly(b231_numer(PB), S, order), specialize_poly(b231_denom(PB), S, order)};
}

std::pair<TruncatedSeries, TruncatedSeries> a231_table_rational(const std::set<int>& S, int order) {
    require_subset(S);
    auto P = [&](const std::vector<std::pair<int, long>>& terms) {
        TruncatedSeries s(order);
        for (auto [d, c] : terms)
            if (d <= order) s.at(d) += c;
        return s;
    };
    const bool t1 = S.count(1), t2 = S.count(2), t3 = S.count(3);
    if (t1 && !t2 && !t3) return {P({{0, 1}}), P({{0, 1}, {1, -1}})};
    if (!t1 && t2 && !t3) return {P({{0, 1}, {2, -1}}), P({{0, 1}, {2, -2}})};
    if (!t1 && !t2 && t3) return {P({{0, 1}, {3, -2}}), P({{0, 1}, {3, -3}})};
    if (t1 && t2 && !t3) return {P({{0, 1}, {1, -1}}), P({{0, 1}, {1, -2}})};
    if (t1 && !t2 && t3) return {P({{0, 1}, {3, -2}}), P({{0, 1}, {1, -1}, {3, -3}, {5, -1}})};
    if (!t1 && t2 && t3)
        return {P({{0, 1}, {2, -2}, {3, -2}, {4, 1}, {5, 4}, {7, -2}}),
                P({{0, 1}, {2, -3}, {3, -3}, {4, 2}, {5, 5}, {7, -5}})};
    return {P({{0, 1}, {1, -2}, {2, 1}, {3, -2}, {4, 4}, {5, -2}}),
            P({{0, 1}, {1, -3}, {2, 2}, {3, -3}, {4, 6}, {5, -5}})};
}

TruncatedSeries a231_subset(const std::set<int>& S, int order) {
    auto [bn, bd] = a231_subset_rational(S, order);
    auto [tn, td] = a231_table_rational(S, order);
    TruncatedSeries via_b = bn / bd;
    TruncatedSeries via_table = tn / td;
    if (via_b != via_table)
        throw std::logic_error("A^S_231: B specialization and tabulated closed form disagree");
    return via_b;
}

TruncatedSeries a3_132(int order) {
    TruncatedSeries c3 = compose_power(catalan_series(order), 3);
    TruncatedSeries u = c3 - TruncatedSeries::constant(order, 1);
    const int K = order / 3 + 1;
    TruncatedSeries m2 = substitute(motzkin_flats(K, K),
                                    TruncatedSeries::constant(order, 2), u);
    TruncatedSeries r = u.scaled(2) * m2;
    r.at(0) = 1;  // the empty permutation; the printed product has no constant term
    return r;
}

TruncatedSeries a13_132_closed(int order) {
    TruncatedSeries c3 = compose_power(catalan_series(order), 3);
    TruncatedSeries inner = c3 * (TruncatedSeries::constant(order, 4) - c3.scaled(3));
    TruncatedSeries root = sqrt_series(inner);
    TruncatedSeries z = TruncatedSeries::monomial(order, 1, 1);
    return c3 / (root - z * c3);
}

TruncatedSeries a13_132_structural(int order) {
    // (1/(1-z)) * F(2/(1-z), c(z^3)-1) with F(t,x) = 1 + x t M(t,x)
    TruncatedSeries one = TruncatedSeries::constant(order, 1);
    TruncatedSeries geom = one / TruncatedSeries::from_ints(order, {1, -1});  // 1/(1-z)
    TruncatedSeries t_val = geom.scaled(2);
    TruncatedSeries x_val = compose_power(catalan_series(order), 3) - one;
    const int K = order / 3 + 1;
    TruncatedSeries M = substitute(motzkin_flats(K, K), t_val, x_val);
    TruncatedSeries F = one + x_val * t_val * M;
    return geom * F;
}

TruncatedSeries a13_132(int order) {
    TruncatedSeries closed = a13_132_closed(order);
    if (closed != a13_132_structural(order))
        throw std::logic_error("A^{1,3}_132: closed form and Motzkin form disagree");
    return closed;
}

Rational growth_estimate(const TruncatedSeries& s, int n, int digits) {
    if (n < 0 || n + 3 > s.order()) throw std::invalid_argument("growth_estimate: index out of range");
    if (s[n].is_zero() || s[n + 3].is_zero())
        throw std::domain_error("growth_estimate: zero coefficient");
    Rational ratio = s[n + 3] / s[n];
    Int scale = 1;
    for (int i = 0; i < 3 * digits; ++i) scale *= 10;
    Int x = numerator(ratio) * scale / denominator(ratio);
    Int den = 1;
    for (int i = 0; i < digits; ++i) den *= 10;
    return Rational(icbrt(x), den);
}

}  // namespace cyclepat
