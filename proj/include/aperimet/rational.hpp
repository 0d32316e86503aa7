// Exact small rationals over int64 with overflow checks.
#ifndef APERIMET_RATIONAL_HPP
#define APERIMET_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace aperimet {

using int128 = __int128;

// All coordinate arithmetic is done in 128-bit intermediates and narrowed
// through this check; desk-scale runs stay far below the limit.
inline std::int64_t checked_i64(int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("exact arithmetic exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(int128(a.num_) * b.den_ + int128(b.num_) * a.den_,
                        int128(a.den_) * b.den_, wide{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(int128(a.num_) * b.den_ - int128(b.num_) * a.den_,
                        int128(a.den_) * b.den_, wide{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(int128(a.num_) * b.num_, int128(a.den_) * b.den_, wide{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(int128(a.num_) * b.den_, int128(a.den_) * b.num_, wide{});
    }
    Rational operator-() const { return Rational(-num_, den_, already_normalized{}); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
    bool is_integer() const { return den_ == 1; }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Largest integer <= value (integer division truncates toward zero).
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct already_normalized {};
    Rational(std::int64_t n, std::int64_t d, already_normalized) : num_(n), den_(d) {}

    struct wide {};
    Rational(int128 n, int128 d, wide) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        int128 an = n < 0 ? -n : n;
        int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = checked_i64(n);
        den_ = checked_i64(d);
    }
    void normalize() { *this = Rational(int128(num_), int128(den_), wide{}); }

    static int128 gcd128(int128 a, int128 b) {
        while (b != 0) { int128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_, den_;
};

} // namespace aperimet

#endif
