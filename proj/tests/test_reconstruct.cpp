#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "splitoct/reconstruct.hpp"

using namespace splitoct;

namespace {

std::vector<std::vector<int>> block_solutions(const ReconstructResult& r, int ternary) {
    for (const BlockSolutions& b : r.blocks)
        if (b.ternary == ternary) return b.solutions;
    return {};
}

// Independent lift oracle: under the beam condition every projection entry
// equals the single nonzero entry on its line, so a cube is determined by its
// support pattern; enumerate all 256 patterns and read the forced values off
// the targets.
std::vector<CubicMatrix> oracle_lift(const Matrix2& pi, const Matrix2& pii,
                                     const Matrix2& piii) {
    std::vector<CubicMatrix> out;
    for (int mask = 0; mask < 256; ++mask) {
        CubicMatrix c;
        bool viable = true;
        for (int x = 0; x < 2 && viable; ++x)
            for (int y = 0; y < 2 && viable; ++y)
                for (int z = 0; z < 2 && viable; ++z) {
                    if (!(mask & (1 << ((x << 2) | (y << 1) | z)))) continue;
                    const GaussianRational& a = pi.m[x][y];
                    const GaussianRational& b = pii.m[x][z];
                    const GaussianRational& d = piii.m[y][z];
                    if (a.is_zero() || a != b || a != d) {
                        viable = false;
                        break;
                    }
                    c.e[x][y][z] = a;
                }
        if (!viable || !beam_condition(c)) continue;
        if (project(c, Axis::I) == pi && project(c, Axis::II) == pii &&
            project(c, Axis::III) == piii)
            out.push_back(c);
    }
    return out;
}

bool contains_cube(const std::vector<CubicMatrix>& list, const CubicMatrix& c) {
    return std::find(list.begin(), list.end(), c) != list.end();
}

}  // namespace

TEST_CASE("candidate space is 32 distinct unit matrices") {
    std::vector<Matrix2> all;
    for (int c = 0; c < CANDIDATE_COUNT; ++c) {
        Matrix2 m = candidate_matrix(c);
        for (const Matrix2& prev : all) CHECK(prev != m);
        all.push_back(m);
        CHECK(candidate_index(m) == c);
    }
    CHECK(candidate_index(pauli(0)) == 0);
    CHECK(candidate_index(pauli(3)) == 1);
    CHECK(candidate_index(pauli(1)) == 16);
    CHECK(candidate_index(pauli(2)) == 30);
    Matrix2 rot;
    rot.m[0][1] = GaussianRational(-1);
    rot.m[1][0] = GaussianRational(1);
    CHECK(candidate_index(rot) == 20);
    Matrix2 not_unit;
    not_unit.m[0][0] = GaussianRational(2);
    CHECK(!candidate_index(not_unit).has_value());
    CHECK_THROWS_AS(candidate_matrix(32), std::out_of_range);
}

TEST_CASE("scope 1 is fully anchored and consistent") {
    ReconstructResult r = reconstruct(default_anchors(), {1});
    REQUIRE(r.blocks.size() == 1);
    CHECK(r.blocks[0].ternary == 1);
    CHECK(r.blocks[0].unknowns.empty());
    CHECK(r.blocks[0].solutions == std::vector<std::vector<int>>{{}});
    CHECK(r.satisfiable());
    CHECK(r.assignment_count() == 1);
    auto assignments = r.assignments();
    REQUIRE(assignments.size() == 1);
    CHECK(assignments[0] == default_anchors());  // the printed Pauli assignment
}

TEST_CASE("scope 2 has the sixteen sign-symmetric solutions") {
    ReconstructResult r = reconstruct(default_anchors(), {2});
    REQUIRE(r.blocks.size() == 1);
    CHECK(r.blocks[0].unknowns ==
          std::vector<SigmaRef>{{1, Axis::II}, {4, Axis::I}, {5, Axis::I}});
    const std::vector<std::vector<int>> expected = {
        {0, 0, 0},   {0, 5, 5},   {0, 16, 16}, {0, 21, 21}, {5, 0, 5},   {5, 5, 0},
        {5, 16, 21}, {5, 21, 16}, {16, 0, 16}, {16, 5, 21}, {16, 16, 0}, {16, 21, 5},
        {21, 0, 21}, {21, 5, 16}, {21, 16, 5}, {21, 21, 0}};
    CHECK(r.blocks[0].solutions == expected);
    CHECK(r.assignment_count() == 16);
}

TEST_CASE("blocks 3 and 4 are unsatisfiable in the candidate space") {
    for (int block : {3, 4}) {
        ReconstructResult r = reconstruct(default_anchors(), {block});
        REQUIRE(r.blocks.size() == 1);
        CHECK(r.blocks[0].solutions.empty());
        CHECK_FALSE(r.satisfiable());
        CHECK(r.assignment_count() == 0);
        CHECK(r.assignments().empty());
    }
}

TEST_CASE("frozen solution counts and heads for blocks 5, 6, 7") {
    auto head4 = [](const std::vector<std::vector<int>>& sols) {
        return std::vector<std::vector<int>>(sols.begin(), sols.begin() + 4);
    };

    ReconstructResult r5 = reconstruct(default_anchors(), {5});
    std::vector<std::vector<int>> s5 = block_solutions(r5, 5);
    REQUIRE(s5.size() == 40);
    CHECK(head4(s5) ==
          std::vector<std::vector<int>>{{0, 0, 5}, {0, 1, 4}, {0, 4, 1}, {0, 5, 0}});

    ReconstructResult r6 = reconstruct(default_anchors(), {6});
    std::vector<std::vector<int>> s6 = block_solutions(r6, 6);
    REQUIRE(s6.size() == 16);
    CHECK(head4(s6) ==
          std::vector<std::vector<int>>{{0, 1, 11}, {0, 4, 14}, {0, 27, 20}, {0, 30, 17}});

    ReconstructResult r7 = reconstruct(default_anchors(), {7});
    std::vector<std::vector<int>> s7 = block_solutions(r7, 7);
    REQUIRE(s7.size() == 24);
    CHECK(head4(s7) ==
          std::vector<std::vector<int>>{{0, 0, 0}, {0, 5, 5}, {0, 16, 16}, {0, 21, 21}});
}

TEST_CASE("partially anchored block 1") {
    SigmaAssignment anchors;
    anchors.set_projection(SigmaRef{1, Axis::I}, pauli(1));
    ReconstructResult r = reconstruct(anchors, {1});
    REQUIRE(r.blocks.size() == 1);
    CHECK(r.blocks[0].unknowns == std::vector<SigmaRef>{{2, Axis::I}, {3, Axis::I}});
    CHECK(r.blocks[0].solutions ==
          std::vector<std::vector<int>>{{1, 27}, {4, 30}, {27, 4}, {30, 1}});
    // (sigma3, -sigma2), (-sigma3, sigma2), (-sigma2, -sigma3), (sigma2, sigma3)
    CHECK(candidate_matrix(27) == GaussianRational(-1) * pauli(2));
    CHECK(candidate_matrix(4) == GaussianRational(-1) * pauli(3));
}

TEST_CASE("parallel sweeps merge deterministically") {
    for (int block : {1, 2, 5, 6, 7}) {
        ReconstructResult serial = reconstruct(default_anchors(), {block}, ExecPolicy::Serial);
        ReconstructResult parallel =
            reconstruct(default_anchors(), {block}, ExecPolicy::Parallel);
        REQUIRE(serial.blocks.size() == parallel.blocks.size());
        for (std::size_t k = 0; k < serial.blocks.size(); ++k)
            CHECK(serial.blocks[k].solutions == parallel.blocks[k].solutions);
    }
    SigmaAssignment partial;
    partial.set_projection(SigmaRef{1, Axis::I}, pauli(1));
    CHECK(reconstruct(partial, {1}, ExecPolicy::Serial).blocks[0].solutions ==
          reconstruct(partial, {1}, ExecPolicy::Parallel).blocks[0].solutions);
}

TEST_CASE("assignments odometer varies later blocks fastest") {
    ReconstructResult r = reconstruct(default_anchors(), {2, 5});
    CHECK(r.assignment_count() == 16 * 40);
    auto first_five = r.assignments(5);
    REQUIRE(first_five.size() == 5);
    // block 2 stays on its first tuple while block 5 advances
    for (const SigmaAssignment& a : first_five) {
        CHECK(*a.projection(SigmaRef{4, Axis::I}) == candidate_matrix(0));
        CHECK(*a.projection(SigmaRef{5, Axis::I}) == candidate_matrix(0));
    }
    CHECK(*first_five[0].projection(SigmaRef{7, Axis::II}) == candidate_matrix(0));
    CHECK(*first_five[1].projection(SigmaRef{7, Axis::II}) == candidate_matrix(1));
    CHECK(*first_five[0].projection(SigmaRef{6, Axis::II}) == candidate_matrix(5));
    CHECK(*first_five[1].projection(SigmaRef{6, Axis::II}) == candidate_matrix(4));
}

TEST_CASE("inconsistent anchors yield an empty block") {
    SigmaAssignment anchors;
    anchors.set_projection(SigmaRef{1, Axis::I}, pauli(1));
    anchors.set_projection(SigmaRef{2, Axis::I}, pauli(1));  // violates the identities
    anchors.set_projection(SigmaRef{3, Axis::I}, pauli(3));
    ReconstructResult r = reconstruct(anchors, {1});
    CHECK(r.blocks[0].solutions.empty());
    CHECK_FALSE(r.satisfiable());
}

TEST_CASE("anchors outside the unit space are rejected") {
    SigmaAssignment anchors;
    Matrix2 big;
    big.m[0][0] = GaussianRational(2);
    big.m[1][1] = GaussianRational(2);
    anchors.set_projection(SigmaRef{1, Axis::I}, big);
    CHECK_THROWS_AS(reconstruct(anchors, {1}), std::invalid_argument);
}

TEST_CASE("scope validation") {
    CHECK_THROWS_AS(reconstruct(default_anchors(), {0}), std::out_of_range);
    CHECK_THROWS_AS(reconstruct(default_anchors(), {8}), std::out_of_range);
    CHECK_THROWS_AS(reconstruct(default_anchors(), std::set<int>{}), std::invalid_argument);
}

TEST_CASE("cube lift of the identity projections") {
    std::vector<CubicMatrix> cubes = find_matching_cubes(pauli(0), pauli(0), pauli(0));
    REQUIRE(cubes.size() == 1);
    CubicMatrix expected;
    expected.e[0][0][0] = GaussianRational(1);
    expected.e[1][1][1] = GaussianRational(1);
    CHECK(cubes[0] == expected);
    CHECK(cubes == oracle_lift(pauli(0), pauli(0), pauli(0)));
}

TEST_CASE("cube lift matches the independent oracle on unit targets") {
    // a sample of target triples, including unsatisfiable ones
    const Matrix2 targets[] = {pauli(0), pauli(1), pauli(2), pauli(3), candidate_matrix(20)};
    for (const Matrix2& a : targets)
        for (const Matrix2& b : targets) {
            std::vector<CubicMatrix> got = find_matching_cubes(a, b, pauli(0));
            std::vector<CubicMatrix> want = oracle_lift(a, b, pauli(0));
            CHECK(got.size() == want.size());
            for (const CubicMatrix& c : want) CHECK(contains_cube(got, c));
        }
}

TEST_CASE("zero projections lift to the zero cube only") {
    std::vector<CubicMatrix> cubes =
        find_matching_cubes(Matrix2::zero(), Matrix2::zero(), Matrix2::zero());
    REQUIRE(cubes.size() == 1);
    CHECK(cubes[0] == CubicMatrix{});
}

TEST_CASE("mismatched grand totals admit no cube") {
    CHECK(find_matching_cubes(pauli(0), Matrix2::zero(), Matrix2::zero()).empty());
}

TEST_CASE("inconsistent projection triple is reported") {
    SigmaAssignment a;
    a.set_projection(SigmaRef{1, Axis::I}, pauli(1));
    a.set_projection(SigmaRef{1, Axis::II}, pauli(0));
    a.set_projection(SigmaRef{1, Axis::III}, pauli(0));
    LiftReport rep = lift_report(a);
    REQUIRE(rep.elements.size() == 1);
    CHECK(rep.elements[0].elem == 1);
    CHECK(rep.elements[0].cubes.empty());
    CHECK_FALSE(rep.consistent());
    CHECK(rep.inconsistent_elements() == std::vector<int>{1});
    CHECK(lift_to_cubes(a).empty());
}

TEST_CASE("lift_to_cubes attaches validated cubes") {
    SigmaAssignment a;
    for (int ax = 1; ax <= 3; ++ax)
        a.set_projection(SigmaRef{4, axis_from_int(ax)}, pauli(0));
    std::vector<SigmaAssignment> lifted = lift_to_cubes(a);
    REQUIRE(lifted.size() == 1);
    REQUIRE(lifted[0].cubes[4].has_value());
    for (int ax = 1; ax <= 3; ++ax)
        CHECK(project(*lifted[0].cubes[4], axis_from_int(ax)) == pauli(0));
}

TEST_CASE("lift sweeps are policy-independent") {
    for (const Matrix2& m : {pauli(0), pauli(2), candidate_matrix(20)}) {
        auto serial = find_matching_cubes(m, pauli(0), pauli(0), ExecPolicy::Serial);
        auto parallel = find_matching_cubes(m, pauli(0), pauli(0), ExecPolicy::Parallel);
        CHECK(serial == parallel);
    }
}

TEST_CASE("assignment with no fully projected element lifts to itself") {
    SigmaAssignment a = default_anchors();
    std::vector<SigmaAssignment> lifted = lift_to_cubes(a);
    REQUIRE(lifted.size() == 1);
    CHECK(lifted[0] == a);
}
