#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace ietlang {

using BigInt = boost::multiprecision::cpp_int;
// Arbitrary-precision rational, kept in lowest terms with positive denominator
// by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline Rational make_rational(const BigInt& p, const BigInt& q) {
    if (q == 0) fail(errc::zero_denominator, "rational with denominator 0");
    return Rational(p, q);
}

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const BigInt& n) { return n.sign(); }

// floor(p/q) as an integer (q > 0 guaranteed by the backend).
inline BigInt floor_of(const Rational& r) {
    BigInt p = rat_num(r), q = rat_den(r);
    BigInt d = p / q;
    if (p % q != 0 && p < 0) --d;
    return d;
}

// Largest k with k*k <= n; n must be nonnegative.
inline BigInt isqrt_floor(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline BigInt pow10(int digits) {
    BigInt v = 1;
    for (int i = 0; i < digits; ++i) v *= 10;
    return v;
}

inline std::string to_string(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Splits n into s*s*d with d square-free; returns {s, d}. Trial division:
// discriminants in this codebase are small.
inline std::pair<BigInt, BigInt> square_free_split(const BigInt& n) {
    BigInt s = 1, d = n, f = 2;
    while (f * f <= d) {
        while (d % (f * f) == 0) {
            d /= f * f;
            s *= f;
        }
        ++f;
    }
    return {s, d};
}

}  // namespace ietlang
