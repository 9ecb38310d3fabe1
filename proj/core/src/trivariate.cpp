#include "cyclepat/trivariate.hpp"

#include <stdexcept>

namespace cyclepat {

const Rational WeightedSeries3::zero_{};

WeightedSeries3::WeightedSeries3(int bound)
    : bound_(bound), jdim_(bound / 2 + 1), kdim_(bound / 3 + 1),
      c_(static_cast<size_t>(bound + 1) * jdim_ * kdim_) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
}

size_t WeightedSeries3::index(int i, int j, int k) const {
    return (static_cast<size_t>(i) * jdim_ + j) * kdim_ + k;
}

WeightedSeries3 WeightedSeries3::constant(int bound, const Rational& v) {
    WeightedSeries3 s(bound);
    s.c_[0] = v;
    return s;
}

WeightedSeries3 WeightedSeries3::monomial(int bound, int i, int j, int k, const Rational& v) {
    WeightedSeries3 s(bound);
    if (s.inside(i, j, k)) s.c_[s.index(i, j, k)] = v;
    return s;
}

const Rational& WeightedSeries3::coeff(int i, int j, int k) const {
    if (!inside(i, j, k)) return zero_;
    return c_[index(i, j, k)];
}

void WeightedSeries3::set(int i, int j, int k, const Rational& v) {
    if (!inside(i, j, k)) throw std::invalid_argument("monomial outside weighted truncation");
    c_[index(i, j, k)] = v;
}

namespace {
void require_same_bound(int a, int b) {
    if (a != b) throw std::invalid_argument("weighted truncation bound mismatch");
}
}  // namespace

WeightedSeries3 operator+(const WeightedSeries3& a, const WeightedSeries3& b) {
    require_same_bound(a.bound_, b.bound_);
    WeightedSeries3 r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

WeightedSeries3 operator-(const WeightedSeries3& a, const WeightedSeries3& b) {
    require_same_bound(a.bound_, b.bound_);
    WeightedSeries3 r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

WeightedSeries3 operator*(const WeightedSeries3& a, const WeightedSeries3& b) {
    require_same_bound(a.bound_, b.bound_);
    const int N = a.bound_;
    WeightedSeries3 r(N);
    for (int i1 = 0; i1 <= N; ++i1)
        for (int j1 = 0; i1 + 2 * j1 <= N; ++j1)
            for (int k1 = 0; i1 + 2 * j1 + 3 * k1 <= N; ++k1) {
                const Rational& av = a.c_[a.index(i1, j1, k1)];
                if (av.is_zero()) continue;
                const int w1 = i1 + 2 * j1 + 3 * k1;
                for (int i2 = 0; i2 + w1 <= N; ++i2)
                    for (int j2 = 0; i2 + 2 * j2 + w1 <= N; ++j2)
                        for (int k2 = 0; i2 + 2 * j2 + 3 * k2 + w1 <= N; ++k2) {
                            const Rational& bv = b.c_[b.index(i2, j2, k2)];
                            if (bv.is_zero()) continue;
                            r.c_[r.index(i1 + i2, j1 + j2, k1 + k2)] += av * bv;
                        }
            }
    return r;
}

WeightedSeries3 operator/(const WeightedSeries3& a, const WeightedSeries3& b) {
    require_same_bound(a.bound_, b.bound_);
    const int N = a.bound_;
    if (b.coeff(0, 0, 0).is_zero())
        throw std::domain_error("division by trivariate series with zero constant term");
    const Rational inv = Rational(1) / b.coeff(0, 0, 0);
    WeightedSeries3 q(N);
    // process monomials in weighted-degree order so lower terms of q are ready
    for (int w = 0; w <= N; ++w)
        for (int i = 0; i <= w; ++i)
            for (int j = 0; i + 2 * j <= w; ++j) {
                if ((w - i - 2 * j) % 3) continue;
                const int k = (w - i - 2 * j) / 3;
                Rational s = a.c_[a.index(i, j, k)];
                for (int i2 = 0; i2 <= i; ++i2)
                    for (int j2 = 0; j2 <= j; ++j2)
                        for (int k2 = 0; k2 <= k; ++k2) {
                            if (i2 == 0 && j2 == 0 && k2 == 0) continue;
                            const Rational& bv = b.c_[b.index(i2, j2, k2)];
                            if (bv.is_zero()) continue;
                            const Rational& qv = q.c_[q.index(i - i2, j - j2, k - k2)];
                            if (qv.is_zero()) continue;
                            s -= qv * bv;
                        }
                if (!s.is_zero()) q.c_[q.index(i, j, k)] = s * inv;
            }
    return q;
}

TruncatedSeries WeightedSeries3::specialize(bool use_t, bool use_x, bool use_y) const {
    TruncatedSeries out(bound_);
    for (int i = 0; i <= bound_; ++i)
        for (int j = 0; i + 2 * j <= bound_; ++j)
            for (int k = 0; i + 2 * j + 3 * k <= bound_; ++k) {
                const Rational& v = c_[index(i, j, k)];
                if (v.is_zero()) continue;
                if ((i > 0 && !use_t) || (j > 0 && !use_x) || (k > 0 && !use_y)) continue;
                out.at(i + 2 * j + 3 * k) += v;
            }
    return out;
}

std::string WeightedSeries3::to_json() const {
    std::string out = "[";
    bool first = true;
    for (int w = 0; w <= bound_; ++w)
        for (int i = 0; i <= w; ++i)
            for (int j = 0; i + 2 * j <= w; ++j) {
                if ((w - i - 2 * j) % 3) continue;
                const int k = (w - i - 2 * j) / 3;
                const Rational& v = c_[index(i, j, k)];
                if (v.is_zero()) continue;
                if (!first) out += ",";
                first = false;
                out += "[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ",";
                if (denominator(v) == 1) out += numerator(v).str();
                else out += "\"" + coeff_string(v) + "\"";
                out += "]";
            }
    return out + "]";
}

WeightedSeries3 expand_rational3(const WeightedSeries3& numer, const WeightedSeries3& denom, int bound) {
    require_same_bound(numer.bound(), bound);
    require_same_bound(denom.bound(), bound);
    return numer / denom;
}

}  // namespace cyclepat
