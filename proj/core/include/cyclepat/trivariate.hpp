#pragma once

#include <string>
#include <vector>

#include "cyclepat/numeric.hpp"
#include "cyclepat/series.hpp"

namespace cyclepat {

/// Trivariate truncated series in (t, x, y) with weights (1, 2, 3): the
/// monomial t^i x^j y^k carries weighted degree i + 2j + 3k, matching the
/// size contribution of i fixed points, j 2-cycles and k 3-cycles.
/// Coefficients are stored for all monomials of weighted degree <= bound.
class WeightedSeries3 {
public:
    explicit WeightedSeries3(int bound);

    static WeightedSeries3 constant(int bound, const Rational& v);
    static WeightedSeries3 monomial(int bound, int i, int j, int k, const Rational& v);

    int bound() const { return bound_; }
    /// Coefficient of t^i x^j y^k; zero outside the weighted truncation.
    const Rational& coeff(int i, int j, int k) const;
    void set(int i, int j, int k, const Rational& v);

    bool operator==(const WeightedSeries3&) const = default;

    friend WeightedSeries3 operator+(const WeightedSeries3& a, const WeightedSeries3& b);
    friend WeightedSeries3 operator-(const WeightedSeries3& a, const WeightedSeries3& b);
    friend WeightedSeries3 operator*(const WeightedSeries3& a, const WeightedSeries3& b);
    /// b must have nonzero constant term.
    friend WeightedSeries3 operator/(const WeightedSeries3& a, const WeightedSeries3& b);

    /// Univariate specialization t -> z*[use_t], x -> z^2*[use_x], y -> z^3*[use_y].
    /// Monomials involving a switched-off variable are dropped.
    TruncatedSeries specialize(bool use_t, bool use_x, bool use_y) const;

    /// Sparse JSON: [[i,j,k,coeff],...] in weighted-degree order, zeros omitted.
    std::string to_json() const;

private:
    int bound_;
    int jdim_, kdim_;
    std::vector<Rational> c_;
    size_t index(int i, int j, int k) const;
    bool inside(int i, int j, int k) const { return i + 2 * j + 3 * k <= bound_ && i >= 0 && j >= 0 && k >= 0; }
    static const Rational zero_;
};

/// Maclaurin expansion of numer/denom through weighted degree `bound`.
/// Polynomial inputs are passed as (finite) WeightedSeries3 values.
WeightedSeries3 expand_rational3(const WeightedSeries3& numer, const WeightedSeries3& denom, int bound);

}  // namespace cyclepat
