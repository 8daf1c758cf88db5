#pragma once

#include "splitoct/rational.hpp"

#include <array>
#include <cstddef>

namespace splitoct {

// The seven index triples along which imaginary units multiply cyclically:
// e_a e_b = e_c for each listed (a,b,c), extended totally antisymmetrically.
inline constexpr std::array<std::array<int, 3>, 7> FANO_TRIPLES = {{
    {1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {1, 7, 6}, {5, 7, 2}, {5, 3, 6},
}};

namespace detail {

struct OctTable {
    int sign[8][8]{};
    int idx[8][8]{};
};

inline const OctTable& oct_table() {
    static const OctTable table = [] {
        OctTable t;
        for (int b = 0; b < 8; ++b) {
            t.sign[0][b] = t.sign[b][0] = 1;
            t.idx[0][b] = t.idx[b][0] = b;
        }
        for (int a = 1; a < 8; ++a) {
            t.sign[a][a] = -1;
            t.idx[a][a] = 0;
        }
        for (const auto& tr : FANO_TRIPLES) {
            const int a = tr[0], b = tr[1], c = tr[2];
            const int even[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
            for (const auto& p : even) {
                t.sign[p[0]][p[1]] = 1;
                t.idx[p[0]][p[1]] = p[2];
                t.sign[p[1]][p[0]] = -1;
                t.idx[p[1]][p[0]] = p[2];
            }
        }
        return t;
    }();
    return table;
}

}  // namespace detail

// e_a e_b as (sign, index); total antisymmetric extension of the triples,
// e_0 a two-sided unit, e_a^2 = -e_0 for a >= 1.
inline std::pair<int, int> oct_basis_product(int a, int b) {
    const auto& t = detail::oct_table();
    return {t.sign[a][b], t.idx[a][b]};
}

struct Octonion {
    std::array<Rational, 8> c{};

    Octonion() = default;
    explicit Octonion(std::array<Rational, 8> v) : c(std::move(v)) {}

    static Octonion basis(int k) {
        Octonion out;
        out.c[static_cast<std::size_t>(k)] = 1;
        return out;
    }

    friend Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion out;
        for (std::size_t k = 0; k < 8; ++k) out.c[k] = a.c[k] + b.c[k];
        return out;
    }
    friend Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion out;
        for (std::size_t k = 0; k < 8; ++k) out.c[k] = a.c[k] - b.c[k];
        return out;
    }
    friend Octonion operator*(const Octonion& a, const Octonion& b) {
        Octonion out;
        for (int p = 0; p < 8; ++p) {
            if (a.c[static_cast<std::size_t>(p)].is_zero()) continue;
            for (int q = 0; q < 8; ++q) {
                if (b.c[static_cast<std::size_t>(q)].is_zero()) continue;
                auto [sign, k] = oct_basis_product(p, q);
                Rational term = a.c[static_cast<std::size_t>(p)] * b.c[static_cast<std::size_t>(q)];
                if (sign < 0) term = -term;
                out.c[static_cast<std::size_t>(k)] += term;
            }
        }
        return out;
    }
    friend Octonion operator*(const Rational& s, const Octonion& a) {
        Octonion out;
        for (std::size_t k = 0; k < 8; ++k) out.c[k] = s * a.c[k];
        return out;
    }
    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
    friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }
};

inline Octonion oct_mul(const Octonion& a, const Octonion& b) { return a * b; }

// Negates the coefficients of e_1..e_7.
inline Octonion oct_conj(const Octonion& a) {
    Octonion out = a;
    for (std::size_t k = 1; k < 8; ++k) out.c[k] = -out.c[k];
    return out;
}

// Squared norm form N^2 = RE(a a*): the e_0 coefficient of a * conj(a).
inline Rational norm_sq(const Octonion& a) {
    return (a * oct_conj(a)).c[0];
}

}  // namespace splitoct
