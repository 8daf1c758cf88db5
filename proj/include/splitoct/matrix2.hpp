#pragma once

#include "splitoct/gaussian.hpp"

#include <array>
#include <optional>

namespace splitoct {

struct Matrix2 {
    GaussianRational m[2][2];

    static Matrix2 zero() { return {}; }
    static Matrix2 identity() {
        Matrix2 out;
        out.m[0][0] = GaussianRational(1);
        out.m[1][1] = GaussianRational(1);
        return out;
    }

    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
        Matrix2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out.m[r][c] = a.m[r][c] + b.m[r][c];
        return out;
    }
    friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
        Matrix2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out.m[r][c] = a.m[r][c] - b.m[r][c];
        return out;
    }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        Matrix2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out.m[r][c] = a.m[r][0] * b.m[0][c] + a.m[r][1] * b.m[1][c];
        return out;
    }
    friend Matrix2 operator*(const GaussianRational& s, const Matrix2& a) {
        Matrix2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out.m[r][c] = s * a.m[r][c];
        return out;
    }
    friend bool operator==(const Matrix2& a, const Matrix2& b) {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                if (a.m[r][c] != b.m[r][c]) return false;
        return true;
    }
    friend bool operator!=(const Matrix2& a, const Matrix2& b) { return !(a == b); }
};

// sigma_0..sigma_3.
inline Matrix2 pauli(int k) {
    Matrix2 out;
    const GaussianRational one(1), i(0, 1);
    switch (k) {
        case 0: out.m[0][0] = one; out.m[1][1] = one; break;
        case 1: out.m[0][1] = one; out.m[1][0] = one; break;
        case 2: out.m[0][1] = -i; out.m[1][0] = i; break;
        case 3: out.m[0][0] = one; out.m[1][1] = -one; break;
        default: throw std::out_of_range("pauli index out of 0..3");
    }
    return out;
}

// Entry permutations induced on a 2x2 projection by 180-degree cube turns.
enum class FlipKind { Id, RowSwap, ColSwap, BothSwap };

inline Matrix2 apply_flip(FlipKind kind, const Matrix2& a) {
    Matrix2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            switch (kind) {
                case FlipKind::Id: out.m[r][c] = a.m[r][c]; break;
                case FlipKind::RowSwap: out.m[r][c] = a.m[1 - r][c]; break;
                case FlipKind::ColSwap: out.m[r][c] = a.m[r][1 - c]; break;
                case FlipKind::BothSwap: out.m[r][c] = a.m[1 - r][1 - c]; break;
            }
        }
    }
    return out;
}

// The solver's finite candidate space: signed generalized permutation matrices
// with nonzero entries in {1,-1,i,-i}. Encoding c in 0..31:
//   pattern = c/16 (0 = diagonal [[a,0],[0,b]], 1 = antidiagonal [[0,a],[b,0]]),
//   a = PHASES[(c%16)/4], b = PHASES[c%4], PHASES = (1,-1,i,-i).
inline constexpr int CANDIDATE_COUNT = 32;

inline GaussianRational candidate_phase(int p) {
    switch (p) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational(-1);
        case 2: return GaussianRational(0, 1);
        default: return GaussianRational(0, -1);
    }
}

inline Matrix2 candidate_matrix(int c) {
    if (c < 0 || c >= CANDIDATE_COUNT) throw std::out_of_range("candidate index out of 0..31");
    const GaussianRational a = candidate_phase((c % 16) / 4);
    const GaussianRational b = candidate_phase(c % 16 % 4);
    Matrix2 out;
    if (c / 16 == 0) {
        out.m[0][0] = a;
        out.m[1][1] = b;
    } else {
        out.m[0][1] = a;
        out.m[1][0] = b;
    }
    return out;
}

inline std::optional<int> candidate_index(const Matrix2& m) {
    for (int c = 0; c < CANDIDATE_COUNT; ++c)
        if (candidate_matrix(c) == m) return c;
    return std::nullopt;
}

}  // namespace splitoct
