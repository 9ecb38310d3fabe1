#include "cyclepat/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclepat {

namespace {

void require_same_order(int a, int b) {
    if (a != b) throw std::invalid_argument("truncation bound mismatch");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order), c_(order + 1) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    if (static_cast<int>(c_.size()) > order + 1)
        throw std::invalid_argument("more coefficients than the bound admits");
    c_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& c) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int k, const Rational& c) {
    TruncatedSeries s(order);
    if (k <= order) s.c_[k] = c;
    return s;
}

TruncatedSeries TruncatedSeries::from_ints(int order, const std::vector<long>& coeffs) {
    TruncatedSeries s(order);
    for (size_t i = 0; i < coeffs.size() && i <= static_cast<size_t>(order); ++i)
        s.c_[i] = coeffs[i];
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_order(order_, o.order_);
    for (int i = 0; i <= order_; ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_order(order_, o.order_);
    for (int i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a.order_, b.order_);
    TruncatedSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order_; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a.order_, b.order_);
    if (b.c_[0].is_zero()) throw std::domain_error("division by series with zero constant term");
    TruncatedSeries q(a.order_);
    Rational inv = Rational(1) / b.c_[0];
    for (int n = 0; n <= a.order_; ++n) {
        Rational s = a.c_[n];
        for (int k = 0; k < n; ++k) {
            if (!q.c_[k].is_zero() && !b.c_[n - k].is_zero()) s -= q.c_[k] * b.c_[n - k];
        }
        q.c_[n] = s * inv;
    }
    return q;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& f) const {
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] * f;
    return r;
}

TruncatedSeries TruncatedSeries::shifted_down(int k) const {
    for (int i = 0; i < k; ++i)
        if (!c_[i].is_zero()) throw std::domain_error("shifted_down: low coefficients not zero");
    TruncatedSeries r(order_);
    for (int i = k; i <= order_; ++i) r.c_[i - k] = c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("truncated: cannot extend the bound");
    TruncatedSeries r(new_order);
    for (int i = 0; i <= new_order; ++i) r.c_[i] = c_[i];
    return r;
}

std::string TruncatedSeries::to_json() const {
    std::string out = "[";
    for (int i = 0; i <= order_; ++i) {
        if (i) out += ",";
        if (denominator(c_[i]) == 1) out += numerator(c_[i]).str();
        else out += "\"" + coeff_string(c_[i]) + "\"";
    }
    return out + "]";
}

TruncatedSeries sqrt_series(const TruncatedSeries& a) {
    if (a[0] != 1) throw std::domain_error("sqrt_series requires constant term 1");
    const int N = a.order();
    int prec = 0;
    TruncatedSeries s = TruncatedSeries::constant(0, 1);
    while (prec < N) {
        prec = std::min(2 * prec + 1, N);
        TruncatedSeries cur(prec);
        for (int i = 0; i <= s.order(); ++i) cur.at(i) = s[i];
        TruncatedSeries next = (cur + a.truncated(prec) / cur).scaled(Rational(1, 2));
        s = std::move(next);
    }
    return s;
}

TruncatedSeries compose_power(const TruncatedSeries& a, int k) {
    if (k < 1) throw std::invalid_argument("compose_power requires k >= 1");
    TruncatedSeries r(a.order());
    for (int m = 0; static_cast<long>(m) * k <= a.order(); ++m) r.at(m * k) = a[m];
    return r;
}

BivariateSeries::BivariateSeries(int x_order, int t_order)
    : x_order_(x_order), t_order_(t_order),
      c_(x_order + 1, std::vector<Rational>(t_order + 1)) {
    if (x_order < 0 || t_order < 0) throw std::invalid_argument("orders must be >= 0");
}

BivariateSeries BivariateSeries::constant(int x_order, int t_order, const Rational& v) {
    BivariateSeries s(x_order, t_order);
    s.c_[0][0] = v;
    return s;
}

BivariateSeries BivariateSeries::from_x_series(const TruncatedSeries& s, int t_order) {
    BivariateSeries r(s.order(), t_order);
    for (int k = 0; k <= s.order(); ++k) r.c_[k][0] = s[k];
    return r;
}

BivariateSeries BivariateSeries::monomial(int x_order, int t_order, int k, int j, const Rational& v) {
    BivariateSeries s(x_order, t_order);
    if (k <= x_order && j <= t_order) s.c_[k][j] = v;
    return s;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    require_same_order(a.x_order_, b.x_order_);
    require_same_order(a.t_order_, b.t_order_);
    BivariateSeries r = a;
    for (int k = 0; k <= a.x_order_; ++k)
        for (int j = 0; j <= a.t_order_; ++j) r.c_[k][j] += b.c_[k][j];
    return r;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    require_same_order(a.x_order_, b.x_order_);
    require_same_order(a.t_order_, b.t_order_);
    BivariateSeries r = a;
    for (int k = 0; k <= a.x_order_; ++k)
        for (int j = 0; j <= a.t_order_; ++j) r.c_[k][j] -= b.c_[k][j];
    return r;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    require_same_order(a.x_order_, b.x_order_);
    require_same_order(a.t_order_, b.t_order_);
    BivariateSeries r(a.x_order_, a.t_order_);
    for (int k1 = 0; k1 <= a.x_order_; ++k1)
        for (int k2 = 0; k1 + k2 <= a.x_order_; ++k2)
            for (int j1 = 0; j1 <= a.t_order_; ++j1) {
                if (a.c_[k1][j1].is_zero()) continue;
                for (int j2 = 0; j1 + j2 <= a.t_order_; ++j2) {
                    if (b.c_[k2][j2].is_zero()) continue;
                    r.c_[k1 + k2][j1 + j2] += a.c_[k1][j1] * b.c_[k2][j2];
                }
            }
    return r;
}

BivariateSeries operator/(const BivariateSeries& a, const BivariateSeries& b) {
    require_same_order(a.x_order_, b.x_order_);
    require_same_order(a.t_order_, b.t_order_);
    for (int j = 1; j <= b.t_order_; ++j)
        if (!b.c_[0][j].is_zero())
            throw std::domain_error("bivariate division: x^0 coefficient must be t-free");
    if (b.c_[0][0].is_zero())
        throw std::domain_error("bivariate division by zero constant term");
    BivariateSeries q(a.x_order_, a.t_order_);
    Rational inv = Rational(1) / b.c_[0][0];
    for (int k = 0; k <= a.x_order_; ++k) {
        std::vector<Rational> s = a.c_[k];
        for (int k2 = 1; k2 <= k; ++k2) {
            for (int j1 = 0; j1 <= a.t_order_; ++j1) {
                if (q.c_[k - k2][j1].is_zero()) continue;
                for (int j2 = 0; j1 + j2 <= a.t_order_; ++j2) {
                    if (b.c_[k2][j2].is_zero()) continue;
                    s[j1 + j2] -= q.c_[k - k2][j1] * b.c_[k2][j2];
                }
            }
        }
        for (int j = 0; j <= a.t_order_; ++j) q.c_[k][j] = s[j] * inv;
    }
    return q;
}

TruncatedSeries substitute(const BivariateSeries& outer, const TruncatedSeries& t_val,
                           const TruncatedSeries& x_val) {
    require_same_order(t_val.order(), x_val.order());
    if (!x_val[0].is_zero())
        throw std::domain_error("substitute: x_val must have zero constant term");
    const int N = t_val.order();
    // powers of t_val up to the stored t-degree
    std::vector<TruncatedSeries> tpow;
    tpow.push_back(TruncatedSeries::constant(N, 1));
    for (int j = 1; j <= outer.t_order(); ++j) tpow.push_back(tpow.back() * t_val);
    // Horner in x
    TruncatedSeries acc(N);
    for (int k = outer.x_order(); k >= 0; --k) {
        acc = acc * x_val;
        for (int j = 0; j <= outer.t_order(); ++j) {
            const Rational& c = outer.coeff(k, j);
            if (c.is_zero()) continue;
            acc += tpow[j].scaled(c);
        }
    }
    return acc;
}

}  // namespace cyclepat
