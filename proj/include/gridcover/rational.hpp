#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gridcover {

// Exact rational on 64-bit integers, always normalized (den > 0, gcd = 1).
// All quantities in this project are tiny (ball sizes, small weight sums),
// so no overflow guarding beyond the normalized representation is done.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.is_zero()) throw std::invalid_argument("rational: division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
    Rational& operator+=(Rational o) { *this = *this + o; return *this; }
    Rational& operator-=(Rational o) { *this = *this - o; return *this; }
    Rational& operator*=(Rational o) { *this = *this * o; return *this; }

    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rational a, Rational b) { return !(a == b); }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }

    // "num" for integers, "num/den" otherwise.
    std::string str() const {
        std::string s = std::to_string(num);
        if (den != 1) s += "/" + std::to_string(den);
        return s;
    }
};

} // namespace gridcover
