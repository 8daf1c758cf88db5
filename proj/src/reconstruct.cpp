#include "splitoct/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace splitoct {

namespace {

// Small exact complex with components in {-1,0,1}; closed under the products
// taken here (units times units).
struct IC {
    int re = 0;
    int im = 0;

    friend IC operator*(IC a, IC b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
    friend IC operator+(IC a, IC b) { return {a.re + b.re, a.im + b.im}; }
    friend bool operator==(IC a, IC b) { return a.re == b.re && a.im == b.im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

struct SmallMat {
    IC m[2][2];

    friend SmallMat operator*(const SmallMat& a, const SmallMat& b) {
        SmallMat out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out.m[r][c] = a.m[r][0] * b.m[0][c] + a.m[r][1] * b.m[1][c];
        return out;
    }
    friend bool operator==(const SmallMat& a, const SmallMat& b) {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                if (!(a.m[r][c] == b.m[r][c])) return false;
        return true;
    }
};

SmallMat scale(IC s, const SmallMat& a) {
    SmallMat out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.m[r][c] = s * a.m[r][c];
    return out;
}

SmallMat flip(FlipKind kind, const SmallMat& a) {
    SmallMat out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const int rr = (kind == FlipKind::RowSwap || kind == FlipKind::BothSwap) ? 1 - r : r;
            const int cc = (kind == FlipKind::ColSwap || kind == FlipKind::BothSwap) ? 1 - c : c;
            out.m[r][c] = a.m[rr][cc];
        }
    }
    return out;
}

bool unit_or_zero(const GaussianRational& g, IC& out) {
    const auto as_int = [](const Rational& r, int& v) {
        if (r.is_zero()) { v = 0; return true; }
        if (r == make_rational(1)) { v = 1; return true; }
        if (r == make_rational(-1)) { v = -1; return true; }
        return false;
    };
    if (!as_int(g.re, out.re) || !as_int(g.im, out.im)) return false;
    return out.re == 0 || out.im == 0;
}

bool to_small(const Matrix2& m, SmallMat& out) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (!unit_or_zero(m.m[r][c], out.m[r][c])) return false;
    return true;
}

constexpr IC PHASES[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

SmallMat small_candidate(int c) {
    SmallMat out;
    const IC a = PHASES[(c % 16) / 4];
    const IC b = PHASES[c % 4];
    if (c / 16 == 0) {
        out.m[0][0] = a;
        out.m[1][1] = b;
    } else {
        out.m[0][1] = a;
        out.m[1][0] = b;
    }
    return out;
}

// One identity compiled against a block's unknown slots: factor sources are
// either fixed anchor matrices or unknown slot numbers.
struct CompiledIdentity {
    FlipKind flip1 = FlipKind::Id;
    FlipKind flip2 = FlipKind::Id;
    int slot1 = -1;  // -1: anchored
    int slot2 = -1;
    int slot_rhs = -1;
    SmallMat fixed1, fixed2, fixed_rhs;
    IC coeff;
};

struct CompiledBlock {
    std::vector<SigmaRef> unknowns;
    std::vector<CompiledIdentity> identities;
};

CompiledBlock compile_block(int block, const SigmaAssignment& anchors) {
    CompiledBlock out;
    for (const SigmaRef& r : ternary_distribution(block))
        if (!anchors.projection(r)) out.unknowns.push_back(r);

    const auto slot_of = [&](const SigmaRef& r) -> int {
        for (std::size_t s = 0; s < out.unknowns.size(); ++s)
            if (out.unknowns[s] == r) return static_cast<int>(s);
        return -1;
    };
    const auto fixed_of = [&](const SigmaRef& r) -> SmallMat {
        SmallMat sm;
        if (!to_small(*anchors.projection(r), sm))
            throw std::invalid_argument("anchor " + sigma_ref_name(r) +
                                        " has entries outside {0, +-1, +-i}");
        return sm;
    };

    for (const TernaryIdentity& id : identity_table()[static_cast<std::size_t>(block - 1)]) {
        CompiledIdentity ci;
        if (id.tilde1) ci.flip1 = tilde_flip(id.tilde1, id.f1.axis);
        if (id.tilde2) ci.flip2 = tilde_flip(id.tilde2, id.f2.axis);
        ci.slot1 = slot_of(id.f1);
        ci.slot2 = slot_of(id.f2);
        ci.slot_rhs = slot_of(id.rhs);
        if (ci.slot1 < 0) ci.fixed1 = fixed_of(id.f1);
        if (ci.slot2 < 0) ci.fixed2 = fixed_of(id.f2);
        if (ci.slot_rhs < 0) ci.fixed_rhs = fixed_of(id.rhs);
        ci.coeff = {id.coeff.re, id.coeff.im};
        out.identities.push_back(ci);
    }
    return out;
}

bool combo_satisfies(const CompiledBlock& block, const SmallMat* picks) {
    for (const CompiledIdentity& id : block.identities) {
        const SmallMat& m1 = id.slot1 < 0 ? id.fixed1 : picks[id.slot1];
        const SmallMat& m2 = id.slot2 < 0 ? id.fixed2 : picks[id.slot2];
        const SmallMat& mr = id.slot_rhs < 0 ? id.fixed_rhs : picks[id.slot_rhs];
        if (!(flip(id.flip1, m1) * flip(id.flip2, m2) == scale(id.coeff, mr))) return false;
    }
    return true;
}

void decode_combo(std::uint64_t lin, std::size_t n, int* idx, SmallMat* picks) {
    for (std::size_t k = n; k-- > 0;) {
        idx[k] = static_cast<int>(lin % CANDIDATE_COUNT);
        picks[k] = small_candidate(idx[k]);
        lin /= CANDIDATE_COUNT;
    }
}

BlockSolutions solve_block(int block, const SigmaAssignment& anchors, ExecPolicy policy) {
    const CompiledBlock compiled = compile_block(block, anchors);
    const std::size_t n = compiled.unknowns.size();

    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= CANDIDATE_COUNT;

    std::vector<char> hit(total, 0);
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t lin = 0; lin < static_cast<std::int64_t>(total); ++lin) {
            int idx[3];
            SmallMat picks[3];
            decode_combo(static_cast<std::uint64_t>(lin), n, idx, picks);
            if (combo_satisfies(compiled, picks)) hit[static_cast<std::size_t>(lin)] = 1;
        }
    } else {
        for (std::uint64_t lin = 0; lin < total; ++lin) {
            int idx[3];
            SmallMat picks[3];
            decode_combo(lin, n, idx, picks);
            if (combo_satisfies(compiled, picks)) hit[lin] = 1;
        }
    }

    BlockSolutions out;
    out.ternary = block;
    out.unknowns = compiled.unknowns;
    for (std::uint64_t lin = 0; lin < total; ++lin) {
        if (!hit[lin]) continue;
        int idx[3];
        SmallMat picks[3];
        decode_combo(lin, n, idx, picks);
        out.solutions.emplace_back(idx, idx + n);
    }
    return out;
}

}  // namespace

bool ReconstructResult::satisfiable() const {
    for (const auto& b : blocks)
        if (b.solutions.empty()) return false;
    return !blocks.empty();
}

std::uint64_t ReconstructResult::assignment_count() const {
    std::uint64_t n = 1;
    for (const auto& b : blocks) n *= b.solutions.size();
    return blocks.empty() ? 0 : n;
}

std::vector<SigmaAssignment> ReconstructResult::assignments(std::uint64_t limit) const {
    std::vector<SigmaAssignment> out;
    const std::uint64_t count = assignment_count();
    if (count == 0) return out;

    std::vector<std::size_t> pick(blocks.size(), 0);
    for (std::uint64_t n = 0; n < count && n < limit; ++n) {
        SigmaAssignment a = anchors;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& sol = blocks[b].solutions[pick[b]];
            for (std::size_t s = 0; s < blocks[b].unknowns.size(); ++s)
                a.set_projection(blocks[b].unknowns[s], candidate_matrix(sol[s]));
        }
        out.push_back(std::move(a));
        for (std::size_t b = blocks.size(); b-- > 0;) {
            if (++pick[b] < blocks[b].solutions.size()) break;
            pick[b] = 0;
        }
    }
    return out;
}

ReconstructResult reconstruct(const SigmaAssignment& anchors, const std::set<int>& scope,
                              ExecPolicy policy) {
    if (scope.empty()) throw std::invalid_argument("empty reconstruction scope");
    for (int b : scope)
        if (b < 1 || b > 7) throw std::out_of_range("scope ternary id out of 1..7");

    // Worked-example guard: the frozen turn table must reproduce the printed
    // axis-1 tilde of [[0,-1],[1,0]] as [[-1,0],[0,1]].
    Matrix2 printed;
    printed.m[0][1] = GaussianRational(-1);
    printed.m[1][0] = GaussianRational(1);
    Matrix2 turned;
    turned.m[0][0] = GaussianRational(-1);
    turned.m[1][1] = GaussianRational(1);
    if (apply_flip(tilde_flip(1, Axis::II), printed) != turned)
        throw std::logic_error("tilde flip table fails the printed worked example");

    ReconstructResult result;
    result.scope.assign(scope.begin(), scope.end());
    result.anchors = anchors;
    for (int b : result.scope) result.blocks.push_back(solve_block(b, anchors, policy));
    return result;
}

namespace {

// Lift search space: base-5 enumeration of the 8 entries, digit order
// (x,y,z) with x outermost, value codes 0,1,-1,i,-i.
constexpr IC ENTRY_VALUES[5] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
constexpr std::uint64_t LIFT_SPACE = 390625;  // 5^8

struct SmallCube {
    IC e[2][2][2];
};

SmallCube cube_from_digits(const std::array<int, 8>& d) {
    SmallCube c;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                c.e[x][y][z] = ENTRY_VALUES[d[static_cast<std::size_t>((x << 2) | (y << 1) | z)]];
    return c;
}

std::array<int, 8> digits_of(std::uint64_t n) {
    std::array<int, 8> d{};
    for (std::size_t k = 8; k-- > 0;) {
        d[k] = static_cast<int>(n % 5);
        n /= 5;
    }
    return d;
}

bool beam_ok(const SmallCube& c) {
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            int nz = 0, ny = 0, nx = 0;
            for (int t = 0; t < 2; ++t) {
                nz += !c.e[p][q][t].is_zero();
                ny += !c.e[p][t][q].is_zero();
                nx += !c.e[t][p][q].is_zero();
            }
            if (nz > 1 || ny > 1 || nx > 1) return false;
        }
    }
    return true;
}

bool projects_to(const SmallCube& c, const SmallMat& pi, const SmallMat& pii,
                 const SmallMat& piii) {
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            if (!(c.e[p][q][0] + c.e[p][q][1] == pi.m[p][q])) return false;
            if (!(c.e[p][0][q] + c.e[p][1][q] == pii.m[p][q])) return false;
            if (!(c.e[0][p][q] + c.e[1][p][q] == piii.m[p][q])) return false;
        }
    }
    return true;
}

CubicMatrix to_cubic(const SmallCube& c) {
    CubicMatrix out;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                out.e[x][y][z] = GaussianRational(c.e[x][y][z].re, c.e[x][y][z].im);
    return out;
}

}  // namespace

std::vector<CubicMatrix> find_matching_cubes(const Matrix2& proj_i, const Matrix2& proj_ii,
                                             const Matrix2& proj_iii, ExecPolicy policy) {
    SmallMat pi, pii, piii;
    // A beam cube's projection entries are single cube entries, hence in
    // {0, +-1, +-i}; any other target value admits no match.
    if (!to_small(proj_i, pi) || !to_small(proj_ii, pii) || !to_small(proj_iii, piii)) return {};

    std::vector<char> hit(LIFT_SPACE, 0);
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t n = 0; n < static_cast<std::int64_t>(LIFT_SPACE); ++n) {
            const SmallCube c = cube_from_digits(digits_of(static_cast<std::uint64_t>(n)));
            if (beam_ok(c) && projects_to(c, pi, pii, piii))
                hit[static_cast<std::size_t>(n)] = 1;
        }
    } else {
        for (std::uint64_t n = 0; n < LIFT_SPACE; ++n) {
            const SmallCube c = cube_from_digits(digits_of(n));
            if (beam_ok(c) && projects_to(c, pi, pii, piii)) hit[n] = 1;
        }
    }

    std::vector<CubicMatrix> out;
    for (std::uint64_t n = 0; n < LIFT_SPACE; ++n)
        if (hit[n]) out.push_back(to_cubic(cube_from_digits(digits_of(n))));
    return out;
}

bool LiftReport::consistent() const {
    for (const auto& e : elements)
        if (e.cubes.empty()) return false;
    return true;
}

std::vector<int> LiftReport::inconsistent_elements() const {
    std::vector<int> out;
    for (const auto& e : elements)
        if (e.cubes.empty()) out.push_back(e.elem);
    return out;
}

LiftReport lift_report(const SigmaAssignment& assignment, ExecPolicy policy) {
    LiftReport report;
    for (int elem = 0; elem < 8; ++elem) {
        const auto& pi = assignment.projection({elem, Axis::I});
        const auto& pii = assignment.projection({elem, Axis::II});
        const auto& piii = assignment.projection({elem, Axis::III});
        if (!pi || !pii || !piii) continue;
        report.elements.push_back({elem, find_matching_cubes(*pi, *pii, *piii, policy)});
    }
    return report;
}

std::vector<SigmaAssignment> lift_to_cubes(const SigmaAssignment& assignment, ExecPolicy policy) {
    const LiftReport report = lift_report(assignment, policy);
    if (report.elements.empty()) return {assignment};
    if (!report.consistent()) return {};

    std::vector<SigmaAssignment> out;
    std::vector<std::size_t> pick(report.elements.size(), 0);
    while (true) {
        SigmaAssignment a = assignment;
        for (std::size_t k = 0; k < report.elements.size(); ++k)
            a.set_cube(report.elements[k].elem, report.elements[k].cubes[pick[k]]);
        out.push_back(std::move(a));
        bool advanced = false;
        for (std::size_t k = report.elements.size(); k-- > 0;) {
            if (++pick[k] < report.elements[k].cubes.size()) {
                advanced = true;
                break;
            }
            pick[k] = 0;
        }
        if (!advanced) return out;
    }
}

}  // namespace splitoct
