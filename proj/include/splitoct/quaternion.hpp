#pragma once

#include "splitoct/rational.hpp"

#include <array>
#include <cstddef>

namespace splitoct {

namespace detail {
// Hamilton basis products: i_a i_b = QSIGN[a][b] * basis[QIDX[a][b]],
// with index 0 the real unit and i_1 i_2 = i_3 cyclically.
inline constexpr int QSIGN[4][4] = {
    {1, 1, 1, 1},
    {1, -1, 1, -1},
    {1, -1, -1, 1},
    {1, 1, -1, -1},
};
inline constexpr int QIDX[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
}  // namespace detail

// Quaternion over an exact or floating coefficient ring.
template <class T>
struct Quaternion {
    std::array<T, 4> c{};

    Quaternion() = default;
    explicit Quaternion(std::array<T, 4> v) : c(std::move(v)) {}

    static Quaternion basis(int q) {
        Quaternion out;
        out.c[static_cast<std::size_t>(q)] = T(1);
        return out;
    }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        Quaternion out;
        for (std::size_t k = 0; k < 4; ++k) out.c[k] = a.c[k] + b.c[k];
        return out;
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        Quaternion out;
        for (std::size_t k = 0; k < 4; ++k) out.c[k] = a.c[k] - b.c[k];
        return out;
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        Quaternion out;
        for (std::size_t p = 0; p < 4; ++p) {
            for (std::size_t q = 0; q < 4; ++q) {
                T term = a.c[p] * b.c[q];
                if (detail::QSIGN[p][q] < 0) term = T(0) - term;
                auto k = static_cast<std::size_t>(detail::QIDX[p][q]);
                out.c[k] = out.c[k] + term;
            }
        }
        return out;
    }
    friend Quaternion operator*(const T& s, const Quaternion& a) {
        Quaternion out;
        for (std::size_t k = 0; k < 4; ++k) out.c[k] = s * a.c[k];
        return out;
    }
    friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c == b.c; }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

template <class T>
Quaternion<T> quat_mul(const Quaternion<T>& a, const Quaternion<T>& b) {
    return a * b;
}

// Negates the imaginary components i_1..i_3.
template <class T>
Quaternion<T> quat_conj(const Quaternion<T>& a) {
    Quaternion<T> out = a;
    for (std::size_t k = 1; k < 4; ++k) out.c[k] = T(0) - out.c[k];
    return out;
}

// (ab)c - a(bc); generic over every algebra type providing * and -.
template <class A>
A associator(const A& a, const A& b, const A& c) {
    return (a * b) * c - a * (b * c);
}

}  // namespace splitoct
