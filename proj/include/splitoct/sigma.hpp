#pragma once

#include "splitoct/cube.hpp"
#include "splitoct/matrix2.hpp"
#include "splitoct/split_table.hpp"

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitoct {

// A projection slot: element index 0..7 on one of the three axes.
struct SigmaRef {
    int elem = 0;
    Axis axis = Axis::I;

    auto operator<=>(const SigmaRef&) const = default;
};

std::string sigma_ref_name(const SigmaRef& ref);  // "Sigma_3^II"

// The seven-ternary distribution of projections; key 1..7.
const std::array<std::array<SigmaRef, 3>, 7>& ternary_distribution_table();

// Convenience view matching the printed list: id -> three (element, axis) slots.
inline const std::array<SigmaRef, 3>& ternary_distribution(int ternary) {
    if (ternary < 1 || ternary > 7) throw std::out_of_range("ternary id out of 1..7");
    return ternary_distribution_table()[static_cast<std::size_t>(ternary - 1)];
}

// One identity of the ternary product table: tilde(f1) * tilde(f2) = coeff * rhs,
// where tilde is 0 (absent) or the turn axis 1..3 attached to that factor.
struct TernaryIdentity {
    int tilde1 = 0;
    SigmaRef f1;
    int tilde2 = 0;
    SigmaRef f2;
    SplitEntry coeff;  // unit scalar on the right-hand side
    SigmaRef rhs;
};

// All 42 identities, transcribed verbatim; block id 1..7, six identities each.
const std::array<std::array<TernaryIdentity, 6>, 7>& identity_table();

// Empirical turn table: flip induced on a bare projection by "turn the cube
// 180 degrees about axis r, then project on axis a". Frozen from the worked
// example plus block-1 consistency; differs from the literal geometric law
// at (2,I), (2,III), (3,II), (3,III) — see geometric_flip and the README.
FlipKind tilde_flip(int rotation_axis, Axis proj_axis);

// The literal induced flip of rotate180 followed by project (provable law).
FlipKind geometric_flip(int rotation_axis, Axis proj_axis);

// Unit product at the sigma level; delegates to the split unit table
// (single source of truth).
inline BasisProduct sigma_mul(int i, int j) { return split_mul_basis(i, j); }

class MissingProjectionError : public std::runtime_error {
  public:
    explicit MissingProjectionError(const SigmaRef& ref)
        : std::runtime_error("assignment lacks projection " + sigma_ref_name(ref)), ref_(ref) {}
    const SigmaRef& ref() const { return ref_; }

  private:
    SigmaRef ref_;
};

// Partial assignment of projection matrices (per element and axis) and,
// optionally, full cubes. Where a cube is present its projections must equal
// the assigned matrices (validate()).
struct SigmaAssignment {
    std::array<std::array<std::optional<Matrix2>, 3>, 8> projections{};
    std::array<std::optional<CubicMatrix>, 8> cubes{};

    const std::optional<Matrix2>& projection(const SigmaRef& ref) const {
        return projections[static_cast<std::size_t>(ref.elem)]
                          [static_cast<std::size_t>(static_cast<int>(ref.axis) - 1)];
    }
    void set_projection(const SigmaRef& ref, const Matrix2& m) {
        projections[static_cast<std::size_t>(ref.elem)]
                   [static_cast<std::size_t>(static_cast<int>(ref.axis) - 1)] = m;
    }
    const Matrix2& require_projection(const SigmaRef& ref) const {
        const auto& p = projection(ref);
        if (!p) throw MissingProjectionError(ref);
        return *p;
    }
    void set_cube(int elem, const CubicMatrix& cube);  // validates projections

    bool operator==(const SigmaAssignment&) const = default;
};

// The five printed projections: Sigma_0^I..Sigma_3^I are the Pauli matrices
// and Sigma_3^II = [[0,-1],[1,0]].
SigmaAssignment default_anchors();

struct TableIICheckRow {
    int block = 0;   // 1..7
    int index = 0;   // 1..6 within the block
    Matrix2 lhs;     // evaluated left side
    Matrix2 rhs;     // coeff * assigned right side
    bool match = false;
};

struct TableIICheck {
    std::vector<TableIICheckRow> rows;

    bool all_match() const;
    std::vector<std::pair<int, int>> mismatches() const;  // (block, index)
};

// Evaluates the identities of the requested blocks as literal 2x2 equations.
// Tilde factors use the cube (rotate180 then project) when the element's cube
// is present, else the frozen projection-level flip. Throws
// MissingProjectionError naming the first unsatisfiable reference.
TableIICheck check_table_II(const SigmaAssignment& assignment,
                            const std::set<int>& blocks = {1, 2, 3, 4, 5, 6, 7});

}  // namespace splitoct
