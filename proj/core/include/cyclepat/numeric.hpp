#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclepat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Int pow2(long e) {
    return Int(1) << e;
}

/// Largest r with r^3 <= x (x >= 0).
inline Int icbrt(const Int& x) {
    if (x < 0) throw std::domain_error("icbrt of negative value");
    if (x == 0) return 0;
    Int r = Int(1) << static_cast<unsigned>((msb(x) + 3) / 3);
    while (true) {
        Int nr = (2 * r + x / (r * r)) / 3;
        if (nr >= r) break;
        r = nr;
    }
    while (r * r * r > x) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= x) ++r;
    return r;
}

/// Decimal expansion of a nonnegative rational, truncated toward zero after
/// `digits` fractional digits (no rounding of the last digit).
inline std::string to_decimal(const Rational& v, int digits) {
    if (v < 0) throw std::domain_error("to_decimal expects a nonnegative value");
    Int num = numerator(v), den = denominator(v);
    Int whole = num / den;
    Int rem = num % den;
    std::string out = whole.str();
    if (digits <= 0) return out;
    out += '.';
    Int scaled = rem;
    for (int i = 0; i < digits; ++i) scaled *= 10;
    std::string frac = Int(scaled / den).str();
    out += std::string(digits - frac.size(), '0') + frac;
    return out;
}

/// Coefficient formatting: integers bare ("5", "-3"), otherwise "p/q".
inline std::string coeff_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace cyclepat
