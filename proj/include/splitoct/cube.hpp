#pragma once

#include "splitoct/matrix2.hpp"

#include <stdexcept>

namespace splitoct {

// Projection axes of a 2x2x2 cube. Axis I collapses the third index (beam
// along z, projection indexed (x,y)); II collapses the second; III the first.
enum class Axis : int { I = 1, II = 2, III = 3 };

inline const char* axis_name(Axis a) {
    switch (a) {
        case Axis::I: return "I";
        case Axis::II: return "II";
        default: return "III";
    }
}

inline Axis axis_from_int(int v) {
    if (v < 1 || v > 3) throw std::out_of_range("axis out of 1..3");
    return static_cast<Axis>(v);
}

// 2x2x2 volumetric matrix with exact Gaussian entries.
struct CubicMatrix {
    GaussianRational e[2][2][2];

    static CubicMatrix zero() { return {}; }

    friend CubicMatrix operator+(const CubicMatrix& a, const CubicMatrix& b) {
        CubicMatrix out;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z) out.e[x][y][z] = a.e[x][y][z] + b.e[x][y][z];
        return out;
    }
    friend CubicMatrix operator*(const GaussianRational& s, const CubicMatrix& a) {
        CubicMatrix out;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z) out.e[x][y][z] = s * a.e[x][y][z];
        return out;
    }
    friend bool operator==(const CubicMatrix& a, const CubicMatrix& b) {
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                    if (a.e[x][y][z] != b.e[x][y][z]) return false;
        return true;
    }
    friend bool operator!=(const CubicMatrix& a, const CubicMatrix& b) { return !(a == b); }
};

// Sums entries along the beam coordinate of the given axis.
inline Matrix2 project(const CubicMatrix& m, Axis axis) {
    Matrix2 out;
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            switch (axis) {
                case Axis::I: out.m[p][q] = m.e[p][q][0] + m.e[p][q][1]; break;
                case Axis::II: out.m[p][q] = m.e[p][0][q] + m.e[p][1][q]; break;
                case Axis::III: out.m[p][q] = m.e[0][p][q] + m.e[1][p][q]; break;
            }
        }
    }
    return out;
}

// 180-degree turn about a coordinate axis: the two orthogonal indices flip.
// axis 1: (x,y,z) -> (x,1-y,1-z); axis 2: (1-x,y,1-z); axis 3: (1-x,1-y,z).
inline CubicMatrix rotate180(const CubicMatrix& m, int axis) {
    if (axis < 1 || axis > 3) throw std::out_of_range("rotation axis out of 1..3");
    CubicMatrix out;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int z = 0; z < 2; ++z) {
                int nx = x, ny = y, nz = z;
                if (axis != 3) nz = 1 - z;
                if (axis != 1) nx = 1 - x;
                if (axis != 2) ny = 1 - y;
                out.e[nx][ny][nz] = m.e[x][y][z];
            }
        }
    }
    return out;
}

// Each axis-parallel line holds at most one nonzero entry.
inline bool beam_condition(const CubicMatrix& m) {
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            int nz = 0, ny = 0, nx = 0;
            for (int t = 0; t < 2; ++t) {
                if (!m.e[p][q][t].is_zero()) ++nz;
                if (!m.e[p][t][q].is_zero()) ++ny;
                if (!m.e[t][p][q].is_zero()) ++nx;
            }
            if (nz > 1 || ny > 1 || nx > 1) return false;
        }
    }
    return true;
}

// Entry sum; equals the entry sum of every projection.
inline GaussianRational grand_total(const CubicMatrix& m) {
    GaussianRational s;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) s = s + m.e[x][y][z];
    return s;
}

inline GaussianRational grand_total(const Matrix2& m) {
    GaussianRational s;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) s = s + m.m[r][c];
    return s;
}

}  // namespace splitoct
