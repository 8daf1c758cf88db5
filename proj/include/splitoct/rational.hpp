#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace splitoct {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar, always kept in canonical reduced form
// (positive denominator, gcd(num, den) == 1) by the backend.
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor rejects negative denominators,
// so the sign is moved to the numerator first.
inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {BigInt(num), BigInt(den)};
}

inline long long rational_num(const Rational& r) {
    return numerator(r).convert_to<long long>();
}

inline long long rational_den(const Rational& r) {
    return denominator(r).convert_to<long long>();
}

inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace splitoct
