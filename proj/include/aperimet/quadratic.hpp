// Exact arithmetic in Z[sqrt2], its half-integer extension, and Q(sqrt2).
#ifndef APERIMET_QUADRATIC_HPP
#define APERIMET_QUADRATIC_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "aperimet/rational.hpp"

namespace aperimet {

// Sign of a + b*sqrt2, exact. sqrt2 is irrational, so a + b*sqrt2 = 0 only
// for a = b = 0; mixed signs reduce to comparing a^2 with 2 b^2.
inline int sign_a_plus_b_sqrt2(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) return 0;
    if (a >= 0 && b >= 0) return 1;
    if (a <= 0 && b <= 0) return -1;
    int128 lhs = int128(a) * a;
    int128 rhs = int128(2) * b * b;
    if (a > 0) return lhs > rhs ? 1 : -1; // b < 0
    return rhs > lhs ? 1 : -1;            // a < 0, b > 0
}

// p + q*sqrt2 with integer p, q.
struct QuadInt {
    std::int64_t p = 0, q = 0;

    constexpr QuadInt() = default;
    constexpr QuadInt(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {}

    friend QuadInt operator+(QuadInt a, QuadInt b) {
        return {checked_i64(int128(a.p) + b.p), checked_i64(int128(a.q) + b.q)};
    }
    friend QuadInt operator-(QuadInt a, QuadInt b) {
        return {checked_i64(int128(a.p) - b.p), checked_i64(int128(a.q) - b.q)};
    }
    friend QuadInt operator*(QuadInt a, QuadInt b) {
        return {checked_i64(int128(a.p) * b.p + int128(2) * a.q * b.q),
                checked_i64(int128(a.p) * b.q + int128(a.q) * b.p)};
    }
    QuadInt operator-() const { return {-p, -q}; }
    QuadInt conj() const { return {p, -q}; } // sqrt2 -> -sqrt2

    friend bool operator==(QuadInt a, QuadInt b) { return a.p == b.p && a.q == b.q; }
    int sign() const { return sign_a_plus_b_sqrt2(p, q); }
    double to_double() const {
        return static_cast<double>(p) + static_cast<double>(q) * std::numbers::sqrt2;
    }
};

// (p + q*sqrt2)/2. Closed under addition and multiplication by QuadInt;
// every direct or internal coordinate of a point of the embedding lattice
// has this form.
struct QuadHalf {
    std::int64_t p = 0, q = 0;

    constexpr QuadHalf() = default;
    constexpr QuadHalf(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {}
    static QuadHalf from_int(std::int64_t n) { return {checked_i64(int128(n) * 2), 0}; }

    friend QuadHalf operator+(QuadHalf a, QuadHalf b) {
        return {checked_i64(int128(a.p) + b.p), checked_i64(int128(a.q) + b.q)};
    }
    friend QuadHalf operator-(QuadHalf a, QuadHalf b) {
        return {checked_i64(int128(a.p) - b.p), checked_i64(int128(a.q) - b.q)};
    }
    QuadHalf operator-() const { return {-p, -q}; }
    QuadHalf conj() const { return {p, -q}; }

    friend QuadHalf operator*(QuadHalf a, QuadInt s) {
        return {checked_i64(int128(a.p) * s.p + int128(2) * a.q * s.q),
                checked_i64(int128(a.p) * s.q + int128(a.q) * s.p)};
    }
    friend QuadHalf operator*(QuadHalf a, std::int64_t s) {
        return {checked_i64(int128(a.p) * s), checked_i64(int128(a.q) * s)};
    }

    friend bool operator==(QuadHalf a, QuadHalf b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(QuadHalf a, QuadHalf b) { return !(a == b); }
    friend bool operator<(QuadHalf a, QuadHalf b) { return (a - b).sign() < 0; }
    friend bool operator<=(QuadHalf a, QuadHalf b) { return (a - b).sign() <= 0; }

    int sign() const { return sign_a_plus_b_sqrt2(p, q); }
    bool is_zero() const { return p == 0 && q == 0; }
    double to_double() const {
        return (static_cast<double>(p) + static_cast<double>(q) * std::numbers::sqrt2) * 0.5;
    }
};

// (a + b*sqrt2)/den, normalized: den > 0, gcd(a, b, den) = 1. The general
// exact value type for covariogram and autocorrelation coefficients.
struct QuadRat {
    std::int64_t a = 0, b = 0, den = 1;

    QuadRat() = default;
    QuadRat(std::int64_t a_, std::int64_t b_, std::int64_t den_) { assign(a_, b_, den_); }
    QuadRat(const Rational& r) : a(r.num()), b(0), den(r.den()) {}
    static QuadRat of(QuadHalf h) { return QuadRat(h.p, h.q, 2); }
    static QuadRat of(QuadInt z) { return QuadRat(z.p, z.q, 1); }

    friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
        return make(int128(x.a) * y.den + int128(y.a) * x.den,
                    int128(x.b) * y.den + int128(y.b) * x.den, int128(x.den) * y.den);
    }
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
        return make(int128(x.a) * y.den - int128(y.a) * x.den,
                    int128(x.b) * y.den - int128(y.b) * x.den, int128(x.den) * y.den);
    }
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
        return make(int128(x.a) * y.a + int128(2) * x.b * y.b,
                    int128(x.a) * y.b + int128(x.b) * y.a, int128(x.den) * y.den);
    }
    QuadRat operator-() const { QuadRat r; r.a = -a; r.b = -b; r.den = den; return r; }
    QuadRat conj() const { QuadRat r; r.a = a; r.b = -b; r.den = den; return r; }

    friend bool operator==(const QuadRat& x, const QuadRat& y) {
        return x.a == y.a && x.b == y.b && x.den == y.den;
    }
    friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }
    friend bool operator<(const QuadRat& x, const QuadRat& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadRat& x, const QuadRat& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QuadRat& x, const QuadRat& y) { return y < x; }
    friend bool operator>=(const QuadRat& x, const QuadRat& y) { return y <= x; }

    int sign() const { return sign_a_plus_b_sqrt2(a, b); }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    QuadRat abs() const { return sign() < 0 ? -*this : *this; }

    // Largest integer m with m <= value; exact (double estimate, exact fix-up).
    std::int64_t floor() const {
        double est = std::floor(to_double());
        auto m = static_cast<std::int64_t>(est);
        while (cmp_int(m) < 0) --m;          // value < m
        while (cmp_int(m + 1) >= 0) ++m;     // value >= m+1
        return m;
    }
    // Sign of value - m.
    int cmp_int(std::int64_t m) const {
        return sign_a_plus_b_sqrt2(checked_i64(int128(a) - int128(m) * den), b);
    }
    bool is_integer() const { return b == 0 && a % den == 0; }

    double to_double() const {
        return (static_cast<double>(a) + static_cast<double>(b) * std::numbers::sqrt2)
               / static_cast<double>(den);
    }
    std::string str() const {
        std::string s = "(" + std::to_string(a);
        if (b != 0) s += (b > 0 ? "+" : "") + std::to_string(b) + "*sqrt2";
        s += ")";
        if (den != 1) s += "/" + std::to_string(den);
        return s;
    }

private:
    static QuadRat make(int128 a, int128 b, int128 den) {
        QuadRat r;
        if (den < 0) { a = -a; b = -b; den = -den; }
        int128 g = gcd3(a < 0 ? -a : a, b < 0 ? -b : b, den);
        if (g > 1) { a /= g; b /= g; den /= g; }
        r.a = checked_i64(a);
        r.b = checked_i64(b);
        r.den = checked_i64(den);
        return r;
    }
    void assign(std::int64_t a_, std::int64_t b_, std::int64_t den_) {
        if (den_ == 0) throw std::domain_error("QuadRat with zero denominator");
        *this = make(a_, b_, den_);
    }
    static int128 gcd3(int128 x, int128 y, int128 z) {
        auto g2 = [](int128 a, int128 b) {
            while (b != 0) { int128 t = a % b; a = b; b = t; }
            return a;
        };
        return g2(g2(x, y), z);
    }
};

} // namespace aperimet

#endif
