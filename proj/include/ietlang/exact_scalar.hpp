#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "rational.hpp"

namespace ietlang {

// Element of Q or of a fixed real quadratic field Q(sqrt(d)):
//     value = a + b*sqrt(d)
// with d a square-free integer >= 2 and d == 0 exactly when b == 0 (the
// rational subcase). All interval endpoints, lengths and slopes in this
// library are ExactScalars; every comparison is decided exactly.
class ExactScalar {
public:
    ExactScalar() : a_(0), b_(0), d_(0) {}
    ExactScalar(int v) : a_(v), b_(0), d_(0) {}                 // NOLINT(google-explicit-constructor)
    ExactScalar(long long v) : a_(v), b_(0), d_(0) {}           // NOLINT(google-explicit-constructor)
    ExactScalar(const Rational& v) : a_(v), b_(0), d_(0) {}     // NOLINT(google-explicit-constructor)
    ExactScalar(const BigInt& v) : a_(Rational(v)), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)

    // a + b*sqrt(d); d is validated square-free, sqrt(1) and sqrt(0) fold away.
    ExactScalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        normalize();
    }

    static ExactScalar rational(const BigInt& p, const BigInt& q) { return ExactScalar(make_rational(p, q)); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    std::int64_t discriminant() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // Exact sign of a + b*sqrt(d), decided by integer arithmetic only.
    int sign() const {
        int sa = sign_of(a_), sb = sign_of(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 with b^2*d. Equality would force
        // sqrt(d) rational, impossible for square-free d >= 2.
        Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
        if (lhs == rhs) return 0;
        return lhs > rhs ? sa : sb;
    }

    ExactScalar operator-() const { return raw(-a_, -b_, d_); }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
        std::int64_t d = joined(x, y);
        return ExactScalar(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) { return x + (-y); }

    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        std::int64_t d = joined(x, y);
        Rational rd(d);
        return ExactScalar(x.a_ * y.a_ + x.b_ * y.b_ * rd, x.a_ * y.b_ + x.b_ * y.a_, d);
    }

    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
        if (y.is_zero()) fail(errc::zero_denominator, "division by zero scalar");
        std::int64_t d = joined(x, y);
        // Multiply by the conjugate of y; the norm a^2 - b^2 d is nonzero.
        Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
        ExactScalar conj = raw(y.a_, -y.b_, y.d_);
        ExactScalar num = x * conj;
        return ExactScalar(num.a_ / norm, num.b_ / norm, d);
    }

    ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
    ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
    ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }
    ExactScalar& operator/=(const ExactScalar& y) { return *this = *this / y; }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        if (x.d_ != 0 && y.d_ != 0 && x.d_ != y.d_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // floor(a + b*sqrt(d)) as a BigInt, via integer square roots.
    BigInt floor() const {
        BigInt fa = floor_of(a_);
        if (b_ == 0) return fa;
        BigInt bn = rat_num(b_), bd = rat_den(b_);
        BigInt fb;
        if (bn > 0) {
            fb = isqrt_floor(bn * bn * d_) / bd;
        } else {
            // b*sqrt(d) is irrational here, so floor(-u) = -floor(u) - 1.
            fb = -(isqrt_floor(bn * bn * d_) / bd) - 1;
        }
        BigInt f = fa + fb;  // floor(u+v) is f or f+1
        return (*this - ExactScalar(BigInt(f + 1))).sign() >= 0 ? f + 1 : f;
    }

    // Decimal approximation truncated toward -inf; the true value lies in
    // [text, text + 10^-digits].
    std::string approx(int digits) const {
        if (digits < 1) fail(errc::invalid_argument, "approx needs digits >= 1");
        BigInt s = pow10(digits);
        BigInt m = (*this * ExactScalar(BigInt(s))).floor();
        bool neg = m < 0;
        BigInt n = neg ? BigInt(-m) : m;
        std::string frac = BigInt(n % s).str();
        frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
        return (neg ? "-" : "") + BigInt(n / s).str() + "." + frac;
    }

    // The exact endpoints of the approx interval, for verification.
    std::pair<Rational, Rational> approx_interval(int digits) const {
        BigInt s = pow10(digits);
        BigInt m = (*this * ExactScalar(BigInt(s))).floor();
        return {Rational(m, s), Rational(m + 1, s)};
    }

    double to_double() const {
        double x = static_cast<double>(a_);
        if (b_ != 0) x += static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
        return x;
    }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string out;
        if (a_ != 0) out += to_string(a_);
        if (sign_of(b_) > 0 && !out.empty()) out += "+";
        if (b_ == -1)
            out += "-";
        else if (b_ != 1)
            out += to_string(b_) + "*";
        out += "sqrt(" + std::to_string(d_) + ")";
        return out;
    }

private:
    static ExactScalar raw(Rational a, Rational b, std::int64_t d) {
        ExactScalar s;
        s.a_ = std::move(a);
        s.b_ = std::move(b);
        s.d_ = s.b_ == 0 ? 0 : d;
        return s;
    }

    static std::int64_t joined(const ExactScalar& x, const ExactScalar& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        fail(errc::mixed_discriminants,
             "cannot combine sqrt(" + std::to_string(x.d_) + ") with sqrt(" + std::to_string(y.d_) + ")");
    }

    void normalize() {
        if (d_ < 0) fail(errc::non_square_free_discriminant, "negative discriminant " + std::to_string(d_));
        if (b_ == 0) {
            d_ = 0;
            return;
        }
        if (d_ == 0) {  // b*sqrt(0) vanishes
            b_ = 0;
            return;
        }
        auto [sq, rest] = square_free_split(BigInt(d_));
        if (rest == 1) {  // d is a perfect square: fold into the rational part
            a_ += b_ * Rational(sq);
            b_ = 0;
            d_ = 0;
            return;
        }
        if (sq != 1) fail(errc::non_square_free_discriminant, std::to_string(d_) + " is not square-free");
    }

    Rational a_;
    Rational b_;
    std::int64_t d_;
};

inline ExactScalar abs(const ExactScalar& x) { return x.sign() < 0 ? -x : x; }

inline ExactScalar min(const ExactScalar& x, const ExactScalar& y) { return x <= y ? x : y; }
inline ExactScalar max(const ExactScalar& x, const ExactScalar& y) { return x >= y ? x : y; }

// A rational strictly between lo and hi (lo < hi required), found by decimal
// refinement of the midpoint; exact comparisons certify the result.
inline Rational rational_between(const ExactScalar& lo, const ExactScalar& hi) {
    if (!(lo < hi)) fail(errc::invalid_argument, "rational_between needs lo < hi");
    ExactScalar zero;
    if (lo < zero && zero < hi) return Rational(0);
    ExactScalar mid = (lo + hi) / ExactScalar(2);
    if (mid.is_rational()) return mid.rational_part();
    for (int digits = 1;; ++digits) {
        auto [lo_r, hi_r] = mid.approx_interval(digits);
        if (lo < ExactScalar(lo_r) && ExactScalar(lo_r) < hi) return lo_r;
        if (lo < ExactScalar(hi_r) && ExactScalar(hi_r) < hi) return hi_r;
    }
}

}  // namespace ietlang
