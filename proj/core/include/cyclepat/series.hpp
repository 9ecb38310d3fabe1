#pragma once

#include <string>
#include <vector>

#include "cyclepat/numeric.hpp"

namespace cyclepat {

/// Exact truncated power series: coefficients of z^0..z^N, arbitrary-precision
/// rationals. Arithmetic is a congruence mod z^{N+1}; binary operations demand
/// equal truncation bounds and throw on mismatch.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> coeffs);  // padded with zeros up to order

    static TruncatedSeries constant(int order, const Rational& c);
    /// c * z^k (coefficient dropped if k > order).
    static TruncatedSeries monomial(int order, int k, const Rational& c);
    /// From integer coefficient list (convenience for polynomial inputs).
    static TruncatedSeries from_ints(int order, const std::vector<long>& coeffs);

    int order() const { return order_; }
    const Rational& operator[](int k) const { return c_[k]; }
    Rational& at(int k) { return c_[k]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const TruncatedSeries&) const = default;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    /// b must have a nonzero constant term.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries scaled(const Rational& f) const;
    /// Divide by z^k; the low k coefficients must vanish. The bound stays put,
    /// so the top k coefficients of the result are unknown and zero-filled.
    TruncatedSeries shifted_down(int k) const;
    TruncatedSeries truncated(int new_order) const;  // new_order <= order

    /// Coefficient list as a JSON array, integers bare, rationals "p/q".
    std::string to_json() const;

private:
    int order_;
    std::vector<Rational> c_;
};

/// Square root with constant term +1 (argument must have constant term 1).
/// Newton iteration s <- (s + a/s)/2 with precision doubling, exact rationals.
TruncatedSeries sqrt_series(const TruncatedSeries& a);

/// a(z^k): coefficient of z^{km} equals coefficient of z^m in a.
TruncatedSeries compose_power(const TruncatedSeries& a, int k);

/// Bivariate truncated series in (t, x) stored as a series in x whose
/// coefficients are polynomials in t (coefficient of x^k has t-degree <= t_order).
class BivariateSeries {
public:
    BivariateSeries(int x_order, int t_order);

    int x_order() const { return x_order_; }
    int t_order() const { return t_order_; }
    /// Coefficient of t^j x^k.
    const Rational& coeff(int k, int j) const { return c_[k][j]; }
    Rational& at(int k, int j) { return c_[k][j]; }

    bool operator==(const BivariateSeries&) const = default;

    static BivariateSeries constant(int x_order, int t_order, const Rational& v);
    /// Lift a univariate series in x (no t dependence).
    static BivariateSeries from_x_series(const TruncatedSeries& s, int t_order);
    /// c * t^j x^k.
    static BivariateSeries monomial(int x_order, int t_order, int k, int j, const Rational& v);

    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    /// Divisor's x^0 coefficient must be a nonzero constant (t-free).
    friend BivariateSeries operator/(const BivariateSeries& a, const BivariateSeries& b);

private:
    int x_order_, t_order_;
    std::vector<std::vector<Rational>> c_;  // c_[k][j] : t^j x^k
};

/// Evaluate outer(t_val, x_val) as a univariate series. x_val must have zero
/// constant term so that powers of x beyond the bound vanish.
TruncatedSeries substitute(const BivariateSeries& outer, const TruncatedSeries& t_val,
                           const TruncatedSeries& x_val);

}  // namespace cyclepat
