#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "sptough/errors.hpp"

namespace sptough {

// Exact non-negative rational, always stored reduced with den >= 1.
// Comparisons cross-multiply in 128 bits, so any representable pair compares
// exactly. Construct through make_rational or the factory below.
struct rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const rational& a, const rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        __int128 lhs = static_cast<__int128>(a.num) * b.den;
        __int128 rhs = static_cast<__int128>(b.num) * a.den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

inline rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    if (num < 0 || den < 0) throw domain_error("rational must be non-negative");
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return rational{num / g, den / g};
}

// Mediant of a/b and c/d is (a+c)/(b+d), reduced after the addition.
inline rational mediant(const rational& a, const rational& b) {
    return make_rational(a.num + b.num, a.den + b.den);
}

inline std::string to_string(const rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace sptough
