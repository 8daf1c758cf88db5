#include "splitoct/sigma.hpp"

namespace splitoct {

namespace {

constexpr SigmaRef ref(int elem, int axis) { return {elem, static_cast<Axis>(axis)}; }

// Unit coefficients.
constexpr SplitEntry P1{1, 0, 0};
constexpr SplitEntry M1{-1, 0, 0};
constexpr SplitEntry PI{0, 1, 0};
constexpr SplitEntry MI{0, -1, 0};

}  // namespace

std::string sigma_ref_name(const SigmaRef& r) {
    return "Sigma_" + std::to_string(r.elem) + "^" + axis_name(r.axis);
}

const std::array<std::array<SigmaRef, 3>, 7>& ternary_distribution_table() {
    static const std::array<std::array<SigmaRef, 3>, 7> table = {{
        {ref(1, 1), ref(2, 1), ref(3, 1)},
        {ref(1, 2), ref(4, 1), ref(5, 1)},
        {ref(2, 2), ref(4, 2), ref(6, 1)},
        {ref(3, 2), ref(4, 3), ref(7, 1)},
        {ref(1, 3), ref(7, 2), ref(6, 2)},
        {ref(5, 2), ref(7, 3), ref(2, 3)},
        {ref(5, 3), ref(3, 3), ref(6, 3)},
    }};
    return table;
}

const std::array<std::array<TernaryIdentity, 6>, 7>& identity_table() {
    static const std::array<std::array<TernaryIdentity, 6>, 7> table = {{
        // 1)
        {{{0, ref(1, 1), 0, ref(2, 1), PI, ref(3, 1)},
          {2, ref(2, 1), 0, ref(1, 1), MI, ref(3, 1)},
          {0, ref(2, 1), 0, ref(3, 1), PI, ref(1, 1)},
          {2, ref(3, 1), 0, ref(2, 1), MI, ref(1, 1)},
          {0, ref(3, 1), 0, ref(1, 1), PI, ref(2, 1)},
          {3, ref(1, 1), 0, ref(3, 1), MI, ref(2, 1)}}},
        // 2)
        {{{0, ref(1, 2), 0, ref(4, 1), P1, ref(5, 1)},
          {3, ref(4, 1), 3, ref(1, 2), P1, ref(5, 1)},
          {0, ref(4, 1), 0, ref(5, 1), P1, ref(1, 2)},
          {3, ref(5, 1), 3, ref(4, 1), P1, ref(1, 2)},
          {0, ref(1, 2), 0, ref(5, 1), P1, ref(4, 1)},
          {3, ref(5, 1), 3, ref(1, 2), P1, ref(4, 1)}}},
        // 3)
        {{{0, ref(2, 2), 0, ref(4, 2), PI, ref(6, 1)},
          {3, ref(4, 2), 3, ref(2, 2), PI, ref(6, 1)},
          {1, ref(4, 2), 2, ref(6, 1), PI, ref(2, 2)},
          {0, ref(6, 1), 0, ref(4, 2), MI, ref(2, 2)},
          {1, ref(2, 2), 2, ref(6, 1), MI, ref(4, 2)},
          {3, ref(6, 1), 3, ref(2, 2), MI, ref(4, 2)}}},
        // 4)
        {{{0, ref(3, 2), 0, ref(4, 3), P1, ref(7, 1)},
          {1, ref(4, 3), 1, ref(3, 2), P1, ref(7, 1)},
          {2, ref(4, 3), 2, ref(7, 1), P1, ref(3, 2)},
          {0, ref(7, 1), 0, ref(4, 3), P1, ref(3, 2)},
          {0, ref(7, 1), 0, ref(3, 2), P1, ref(4, 3)},
          {1, ref(3, 2), 2, ref(7, 1), P1, ref(4, 3)}}},
        // 5)
        {{{0, ref(1, 3), 0, ref(6, 2), M1, ref(7, 2)},
          {3, ref(6, 2), 2, ref(1, 3), M1, ref(7, 2)},
          {3, ref(6, 2), 3, ref(7, 2), M1, ref(1, 3)},
          {0, ref(7, 2), 0, ref(6, 2), M1, ref(1, 3)},
          {0, ref(1, 3), 0, ref(7, 2), M1, ref(6, 2)},
          {3, ref(7, 2), 2, ref(1, 3), M1, ref(6, 2)}}},
        // 6)
        {{{0, ref(5, 2), 0, ref(2, 3), PI, ref(7, 3)},
          {2, ref(2, 3), 3, ref(5, 2), PI, ref(7, 3)},
          {0, ref(2, 3), 0, ref(7, 3), PI, ref(5, 2)},
          {2, ref(7, 3), 2, ref(2, 3), PI, ref(5, 2)},
          {3, ref(5, 2), 3, ref(7, 3), PI, ref(2, 3)},
          {0, ref(7, 3), 0, ref(5, 2), MI, ref(2, 3)}}},
        // 7)
        {{{0, ref(5, 3), 0, ref(6, 3), P1, ref(3, 3)},
          {2, ref(6, 3), 2, ref(5, 3), P1, ref(3, 3)},
          {0, ref(6, 3), 0, ref(3, 3), P1, ref(5, 3)},
          {1, ref(3, 3), 2, ref(6, 3), P1, ref(5, 3)},
          {0, ref(5, 3), 0, ref(3, 3), P1, ref(6, 3)},
          {2, ref(3, 3), 2, ref(5, 3), P1, ref(6, 3)}}},
    }};
    return table;
}

FlipKind geometric_flip(int rotation_axis, Axis proj_axis) {
    // Derived: rotate180 flips the two indices orthogonal to its axis; a
    // projection keeps two of the three indices, so the flip restricts to
    // id/row/col/both on the projection plane.
    static constexpr FlipKind table[3][3] = {
        // proj I, II, III
        {FlipKind::ColSwap, FlipKind::ColSwap, FlipKind::BothSwap},    // rotation 1
        {FlipKind::RowSwap, FlipKind::BothSwap, FlipKind::ColSwap},    // rotation 2
        {FlipKind::BothSwap, FlipKind::RowSwap, FlipKind::RowSwap},    // rotation 3
    };
    if (rotation_axis < 1 || rotation_axis > 3) throw std::out_of_range("rotation axis");
    return table[rotation_axis - 1][static_cast<int>(proj_axis) - 1];
}

FlipKind tilde_flip(int rotation_axis, Axis proj_axis) {
    // Frozen empirical table. Pinned by the printed worked example
    // (turn axis 1 on [[0,-1],[1,0]] prints [[-1,0],[0,1]], so (1,II) is a
    // column swap) and by requiring all six block-1 identities to hold on the
    // printed Pauli anchors; remaining freedom resolved by maximizing the
    // number of satisfiable blocks, then staying closest to geometric_flip.
    static constexpr FlipKind table[3][3] = {
        {FlipKind::ColSwap, FlipKind::ColSwap, FlipKind::BothSwap},  // rotation 1
        {FlipKind::Id, FlipKind::BothSwap, FlipKind::Id},            // rotation 2
        {FlipKind::BothSwap, FlipKind::Id, FlipKind::BothSwap},      // rotation 3
    };
    if (rotation_axis < 1 || rotation_axis > 3) throw std::out_of_range("rotation axis");
    return table[rotation_axis - 1][static_cast<int>(proj_axis) - 1];
}

void SigmaAssignment::set_cube(int elem, const CubicMatrix& cube) {
    for (Axis axis : {Axis::I, Axis::II, Axis::III}) {
        const auto& assigned = projection({elem, axis});
        if (assigned && *assigned != project(cube, axis))
            throw std::invalid_argument("cube projections disagree with assigned " +
                                        sigma_ref_name({elem, axis}));
    }
    cubes[static_cast<std::size_t>(elem)] = cube;
}

SigmaAssignment default_anchors() {
    SigmaAssignment a;
    for (int k = 0; k < 4; ++k) a.set_projection({k, Axis::I}, pauli(k));
    Matrix2 s3ii;
    s3ii.m[0][1] = GaussianRational(-1);
    s3ii.m[1][0] = GaussianRational(1);
    a.set_projection({3, Axis::II}, s3ii);
    return a;
}

bool TableIICheck::all_match() const {
    for (const auto& r : rows)
        if (!r.match) return false;
    return true;
}

std::vector<std::pair<int, int>> TableIICheck::mismatches() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& r : rows)
        if (!r.match) out.emplace_back(r.block, r.index);
    return out;
}

namespace {

Matrix2 tilde_factor(const SigmaAssignment& asg, int tilde, const SigmaRef& r) {
    if (tilde == 0) return asg.require_projection(r);
    const auto& cube = asg.cubes[static_cast<std::size_t>(r.elem)];
    if (cube) return project(rotate180(*cube, tilde), r.axis);
    return apply_flip(tilde_flip(tilde, r.axis), asg.require_projection(r));
}

}  // namespace

TableIICheck check_table_II(const SigmaAssignment& assignment, const std::set<int>& blocks) {
    TableIICheck check;
    for (int block : blocks) {
        if (block < 1 || block > 7) throw std::out_of_range("block id out of 1..7");
        const auto& ids = identity_table()[static_cast<std::size_t>(block - 1)];
        for (std::size_t n = 0; n < ids.size(); ++n) {
            const TernaryIdentity& id = ids[n];
            TableIICheckRow row;
            row.block = block;
            row.index = static_cast<int>(n) + 1;
            Matrix2 first = tilde_factor(assignment, id.tilde1, id.f1);
            Matrix2 second = tilde_factor(assignment, id.tilde2, id.f2);
            row.lhs = first * second;
            row.rhs = GaussianRational(id.coeff.re, id.coeff.im) *
                      assignment.require_projection(id.rhs);
            row.match = row.lhs == row.rhs;
            check.rows.push_back(std::move(row));
        }
    }
    return check;
}

}  // namespace splitoct
