#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "vsg/error.hpp"

namespace vsg {

// Exact rational with 64-bit numerator/denominator. Comparisons go through
// 128-bit cross multiplication, so any value built from board-scale integers
// is safe. Denominator is always positive.
struct rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    rational() = default;
    rational(std::int64_t n) : num(n), den(1) {}
    rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) fail(errc::bad_argument, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const rational& a, const rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(a.num * b.num, a.den * b.den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// true iff y < r*x + c, exactly.
inline bool below_line(std::int64_t x, std::int64_t y, const rational& slope, const rational& offset) {
    // y < (n/d)x + (cn/cd)  <=>  y*d*cd < n*cd*x + cn*d
    __int128 lhs = static_cast<__int128>(y) * slope.den * offset.den;
    __int128 rhs = static_cast<__int128>(slope.num) * offset.den * x +
                   static_cast<__int128>(offset.num) * slope.den;
    return lhs < rhs;
}

inline bool above_line(std::int64_t x, std::int64_t y, const rational& slope, const rational& offset) {
    __int128 lhs = static_cast<__int128>(y) * slope.den * offset.den;
    __int128 rhs = static_cast<__int128>(slope.num) * offset.den * x +
                   static_cast<__int128>(offset.num) * slope.den;
    return lhs > rhs;
}

} // namespace vsg
