#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "splitoct/cube.hpp"
#include "splitoct/gaussian.hpp"
#include "splitoct/matrix2.hpp"
#include "splitoct/sigma.hpp"

namespace splitoct {

// Dense square matrix with Gaussian-rational entries, dimension fixed at
// construction.  Big enough for the 8x8 products built here; no need for a
// full linear-algebra library.
struct SquareMatrix {
    std::size_t n = 0;
    std::vector<GaussianRational> a;

    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : n(dim), a(dim * dim) {}

    static SquareMatrix identity(std::size_t dim);

    GaussianRational& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    SquareMatrix operator+(const SquareMatrix& o) const;
    SquareMatrix operator-(const SquareMatrix& o) const;
    SquareMatrix operator*(const SquareMatrix& o) const;
    bool operator==(const SquareMatrix& o) const { return n == o.n && a == o.a; }
    bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_scalar(const GaussianRational& s) const;
};

SquareMatrix operator*(const GaussianRational& s, const SquareMatrix& m);

SquareMatrix to_square(const Matrix2& m);

// Kronecker product, row-major block convention: (A kron B)[i*nB+k][j*nB+l]
// = A[i][j] * B[k][l].
SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b);

// Cubic array of side n with the same three-axis projection semantics as
// CubicMatrix; used for Kronecker products of 2x2x2 cubes.
struct BigCube {
    std::size_t n = 0;
    std::vector<GaussianRational> a;

    BigCube() = default;
    explicit BigCube(std::size_t side) : n(side), a(side * side * side) {}

    GaussianRational& at(std::size_t x, std::size_t y, std::size_t z) {
        return a[(x * n + y) * n + z];
    }
    const GaussianRational& at(std::size_t x, std::size_t y, std::size_t z) const {
        return a[(x * n + y) * n + z];
    }

    bool operator==(const BigCube& o) const { return n == o.n && a == o.a; }
};

BigCube to_big_cube(const CubicMatrix& c);

// Cubic Kronecker product: entry indices combine per axis, first factor on
// the most significant digit.
BigCube kron_cubic(const BigCube& a, const BigCube& b);

// Axis projection of a BigCube, mirroring project() for CubicMatrix:
// axis I sums over z, axis II over y, axis III over x.
SquareMatrix project(const BigCube& c, Axis axis);

enum class GammaCase { One = 1, Two = 2 };

enum class ProjectionPolicy { AxisI, Distribution, Explicit };

std::string policy_name(ProjectionPolicy p);

struct GammaFactor {
    int elem = 0;       // algebra element index of the 2x2 factor
    Axis axis = Axis::I;
};

struct GammaEntry {
    int index = 0;            // which product this is, 0..7
    bool present = false;
    SquareMatrix matrix;      // 8x8 when present
    GaussianRational scalar;  // overall scalar applied to the triple product
    std::array<GammaFactor, 3> factors{};
    std::string absent_reason;
};

struct CliffordReport {
    // indices of products that pairwise anticommute and square to a scalar
    std::vector<int> subset;
    // anticommutator for every unordered pair of present products
    struct PairStatus {
        int a = 0;
        int b = 0;
        SquareMatrix anticommutator;
        bool is_zero = false;
    };
    std::vector<PairStatus> pairs;
    struct SquareStatus {
        int index = 0;
        bool is_scalar = false;
        GaussianRational value;  // scalar s with G*G == s * identity
    };
    std::vector<SquareStatus> squares;
    std::vector<std::string> signature;  // "+" / "-" per subset member
};

struct GammaSet {
    GammaCase which = GammaCase::One;
    ProjectionPolicy policy = ProjectionPolicy::AxisI;
    std::array<GammaEntry, 8> entries{};

    const GammaEntry& entry(int k) const { return entries.at(static_cast<std::size_t>(k)); }
    std::vector<int> present_indices() const;
};

// Resolves the 2x2 factor for an element under a policy.  AxisI reads the
// axis-I projection; Distribution reads the axis the element is first listed
// under in the ternary distribution; Explicit requires the assignment to
// carry exactly the referenced projection.
std::optional<Matrix2> resolve_factor(const SigmaAssignment& a, int elem,
                                      ProjectionPolicy policy, Axis* chosen = nullptr);

GammaSet build_case1(const SigmaAssignment& a, ProjectionPolicy policy = ProjectionPolicy::AxisI);
GammaSet build_case2(const SigmaAssignment& a, ProjectionPolicy policy = ProjectionPolicy::AxisI);
GammaSet build_gammas(GammaCase which, const SigmaAssignment& a,
                      ProjectionPolicy policy = ProjectionPolicy::AxisI);

// Checks every pair of present products for vanishing anticommutator and
// every present product for a scalar square, then reports the largest
// pairwise-anticommuting collection found greedily (best-connected first).
// Throws std::invalid_argument when fewer than two products are present.
CliffordReport clifford_report(const GammaSet& g);

}  // namespace splitoct
