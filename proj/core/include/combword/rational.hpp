#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace combword {

// Small exact rational for the shortness constants lambda and epsilon.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend constexpr bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend constexpr bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }

    constexpr std::int64_t floor() const {
        std::int64_t q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    // floor(this * n + other), the integer length bound lambda*n + epsilon.
    constexpr std::int64_t floor_scale_add(std::int64_t n, const Rational& other) const {
        // num*n/den + other.num/other.den over the common denominator
        std::int64_t common = den * other.den;
        std::int64_t top = num * n * other.den + other.num * den;
        std::int64_t q = top / common;
        if (top % common != 0 && ((top < 0) != (common < 0))) --q;
        return q;
    }

    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace combword
