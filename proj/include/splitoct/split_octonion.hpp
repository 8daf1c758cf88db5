#pragma once

#include "splitoct/gaussian.hpp"
#include "splitoct/split_table.hpp"

#include <array>
#include <complex>
#include <cstddef>

namespace splitoct {

// Adapts the split table's small unit coefficients to a concrete scalar ring.
template <class C>
struct SplitCoeff;

template <>
struct SplitCoeff<GaussianRational> {
    static GaussianRational from_units(int re, int im) { return {re, im}; }
    static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
};

template <>
struct SplitCoeff<std::complex<double>> {
    static std::complex<double> from_units(int re, int im) {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
    static bool is_zero(const std::complex<double>& v) { return v == 0.0; }
};

// Element of the split algebra over basis u_0..u_7. The coefficient ring is
// exact (GaussianRational) everywhere except the floating-point solution
// evaluator, which instantiates complex<double>.
template <class C = GaussianRational>
struct SplitOctonion {
    std::array<C, 8> c{};

    SplitOctonion() = default;
    explicit SplitOctonion(std::array<C, 8> v) : c(std::move(v)) {}

    static SplitOctonion basis(int k) {
        SplitOctonion out;
        out.c[static_cast<std::size_t>(k)] = SplitCoeff<C>::from_units(1, 0);
        return out;
    }

    friend SplitOctonion operator+(const SplitOctonion& a, const SplitOctonion& b) {
        SplitOctonion out;
        for (std::size_t k = 0; k < 8; ++k) out.c[k] = a.c[k] + b.c[k];
        return out;
    }
    friend SplitOctonion operator-(const SplitOctonion& a, const SplitOctonion& b) {
        SplitOctonion out;
        for (std::size_t k = 0; k < 8; ++k) out.c[k] = a.c[k] - b.c[k];
        return out;
    }
    friend SplitOctonion operator*(const SplitOctonion& a, const SplitOctonion& b) {
        SplitOctonion out;
        for (int p = 0; p < 8; ++p) {
            const C& ca = a.c[static_cast<std::size_t>(p)];
            if (SplitCoeff<C>::is_zero(ca)) continue;
            for (int q = 0; q < 8; ++q) {
                const C& cb = b.c[static_cast<std::size_t>(q)];
                if (SplitCoeff<C>::is_zero(cb)) continue;
                const SplitEntry& e = split_basis_entry(p, q);
                const auto k = static_cast<std::size_t>(e.index);
                out.c[k] = out.c[k] + ca * cb * SplitCoeff<C>::from_units(e.re, e.im);
            }
        }
        return out;
    }
    friend SplitOctonion operator*(const C& s, const SplitOctonion& a) {
        SplitOctonion out;
        for (std::size_t k = 0; k < 8; ++k) out.c[k] = s * a.c[k];
        return out;
    }
    friend bool operator==(const SplitOctonion& a, const SplitOctonion& b) { return a.c == b.c; }
    friend bool operator!=(const SplitOctonion& a, const SplitOctonion& b) { return !(a == b); }
};

template <class C>
SplitOctonion<C> split_mul(const SplitOctonion<C>& a, const SplitOctonion<C>& b) {
    return a * b;
}

// Negates the coefficients of u_1..u_7.
template <class C>
SplitOctonion<C> split_conj(const SplitOctonion<C>& a) {
    SplitOctonion<C> out = a;
    for (std::size_t k = 1; k < 8; ++k) out.c[k] = C{} - out.c[k];
    return out;
}

// N^2 = RE(a a*) as the full u_0 coefficient; callers take its real part.
// Split elements can make this negative (no composition law here).
template <class C>
C split_norm_sq_coeff(const SplitOctonion<C>& a) {
    return (a * split_conj(a)).c[0];
}

inline Rational split_norm_sq(const SplitOctonion<GaussianRational>& a) {
    return split_norm_sq_coeff(a).re;
}

}  // namespace splitoct
