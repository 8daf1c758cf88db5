#pragma once

#include "splitoct/octonion.hpp"
#include "splitoct/quaternion.hpp"

#include <array>
#include <cstddef>

namespace splitoct {

// Embedding of the split units into the quaternion (x) octonion algebra:
// u_k = i_{UNIT_EMBEDDING[k][0]} (x) e_{UNIT_EMBEDDING[k][1]}.
inline constexpr std::array<std::array<int, 2>, 8> UNIT_EMBEDDING = {{
    {0, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {2, 6}, {3, 7},
}};

// Element of H (x) O with rational coefficients over the basis i_q (x) e_b.
// Multiplication is factorwise: (i_a (x) e_x)(i_b (x) e_y) = (i_a i_b) (x) (e_x e_y).
struct TensorHO {
    // c[q][b] multiplies i_q (x) e_b.
    std::array<std::array<Rational, 8>, 4> c{};

    TensorHO() = default;

    static TensorHO basis(int q, int b) {
        TensorHO out;
        out.c[static_cast<std::size_t>(q)][static_cast<std::size_t>(b)] = 1;
        return out;
    }

    // Image of the split unit u_k.
    static TensorHO unit(int k) {
        const auto& e = UNIT_EMBEDDING[static_cast<std::size_t>(k)];
        return basis(e[0], e[1]);
    }

    bool is_zero() const {
        for (const auto& row : c)
            for (const auto& v : row)
                if (!v.is_zero()) return false;
        return true;
    }

    friend TensorHO operator+(const TensorHO& a, const TensorHO& b) {
        TensorHO out;
        for (std::size_t q = 0; q < 4; ++q)
            for (std::size_t k = 0; k < 8; ++k) out.c[q][k] = a.c[q][k] + b.c[q][k];
        return out;
    }
    friend TensorHO operator-(const TensorHO& a, const TensorHO& b) {
        TensorHO out;
        for (std::size_t q = 0; q < 4; ++q)
            for (std::size_t k = 0; k < 8; ++k) out.c[q][k] = a.c[q][k] - b.c[q][k];
        return out;
    }
    friend TensorHO operator*(const TensorHO& a, const TensorHO& b) {
        TensorHO out;
        for (int qa = 0; qa < 4; ++qa) {
            for (int ea = 0; ea < 8; ++ea) {
                const Rational& ca = a.c[static_cast<std::size_t>(qa)][static_cast<std::size_t>(ea)];
                if (ca.is_zero()) continue;
                for (int qb = 0; qb < 4; ++qb) {
                    for (int eb = 0; eb < 8; ++eb) {
                        const Rational& cb =
                            b.c[static_cast<std::size_t>(qb)][static_cast<std::size_t>(eb)];
                        if (cb.is_zero()) continue;
                        const int qs = detail::QSIGN[qa][qb];
                        const int qk = detail::QIDX[qa][qb];
                        auto [os, ok] = oct_basis_product(ea, eb);
                        Rational term = ca * cb;
                        if (qs * os < 0) term = -term;
                        out.c[static_cast<std::size_t>(qk)][static_cast<std::size_t>(ok)] += term;
                    }
                }
            }
        }
        return out;
    }
    friend TensorHO operator*(const Rational& s, const TensorHO& a) {
        TensorHO out;
        for (std::size_t q = 0; q < 4; ++q)
            for (std::size_t k = 0; k < 8; ++k) out.c[q][k] = s * a.c[q][k];
        return out;
    }
    friend bool operator==(const TensorHO& a, const TensorHO& b) { return a.c == b.c; }
    friend bool operator!=(const TensorHO& a, const TensorHO& b) { return !(a == b); }
};

inline TensorHO ho_mul(const TensorHO& a, const TensorHO& b) { return a * b; }

// Negates every imaginary basis component (all but 1 (x) e_0).
inline TensorHO ho_conj(const TensorHO& a) {
    TensorHO out;
    for (std::size_t q = 0; q < 4; ++q)
        for (std::size_t k = 0; k < 8; ++k) out.c[q][k] = -a.c[q][k];
    out.c[0][0] = a.c[0][0];
    return out;
}

}  // namespace splitoct
