#pragma once

#include "splitoct/sigma.hpp"

#include <cstdint>
#include <limits>
#include <set>
#include <vector>

namespace splitoct {

// Every search kernel has a sequential reference and an OpenMP variant with a
// deterministic merge (results ordered by enumeration index), so both policies
// return bit-identical lists.
enum class ExecPolicy { Serial, Parallel };

struct BlockSolutions {
    int ternary = 0;
    std::vector<SigmaRef> unknowns;              // distribution order
    std::vector<std::vector<int>> solutions;     // candidate-index tuples, ascending
};

// Factored solution set: the identity blocks reference disjoint projection
// slots, so the full assignment list is the cross product of the per-block
// lists. assignments() materializes it lazily (blocks ascending, later blocks
// varying fastest).
struct ReconstructResult {
    std::vector<int> scope;
    SigmaAssignment anchors;
    std::vector<BlockSolutions> blocks;

    bool satisfiable() const;
    std::uint64_t assignment_count() const;
    std::vector<SigmaAssignment> assignments(
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) const;
};

// Exhaustive search over the 32-candidate space for every projection slot the
// anchors leave open in the scoped ternaries, keeping assignments that satisfy
// all six identities of each block. Anchor matrices must have entries in
// {0, +-1, +-i}. Empty per-block lists mean "unsatisfiable under candidate
// space" and are reported as such, never widened.
ReconstructResult reconstruct(const SigmaAssignment& anchors, const std::set<int>& scope,
                              ExecPolicy policy = ExecPolicy::Serial);

// All beam-condition cubes with entries in {0, +-1, +-i} whose projections
// match the three targets; ordered by the base-5 enumeration index (entry
// order (x,y,z) with x outermost, value order 0, 1, -1, i, -i).
std::vector<CubicMatrix> find_matching_cubes(const Matrix2& proj_i, const Matrix2& proj_ii,
                                             const Matrix2& proj_iii,
                                             ExecPolicy policy = ExecPolicy::Serial);

struct LiftOutcome {
    int elem = 0;
    std::vector<CubicMatrix> cubes;
};

struct LiftReport {
    std::vector<LiftOutcome> elements;  // elements with all three projections, ascending

    bool consistent() const;                     // every targeted element lifted
    std::vector<int> inconsistent_elements() const;
};

LiftReport lift_report(const SigmaAssignment& assignment, ExecPolicy policy = ExecPolicy::Serial);

// Cross product of the per-element cube choices attached to the assignment.
// Empty when some fully-projected element admits no cube ("inconsistent
// projections"; see lift_report for the offenders).
std::vector<SigmaAssignment> lift_to_cubes(const SigmaAssignment& assignment,
                                           ExecPolicy policy = ExecPolicy::Serial);

}  // namespace splitoct
