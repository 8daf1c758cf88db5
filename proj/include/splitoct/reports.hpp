#pragma once

#include "splitoct/split_octonion.hpp"
#include "splitoct/split_table.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace splitoct {

// ---- unit table vs tensor oracle ----

struct TableDiffRow {
    std::pair<int, int> pair;
    BasisProduct expected;  // transcribed table
    BasisProduct computed;  // tensor-embedding oracle
    bool match = false;
};

struct TableDiff {
    std::vector<TableDiffRow> rows;  // all 64 ordered pairs, row-major

    int mismatch_count() const;
    std::vector<std::pair<int, int>> mismatched_pairs() const;
};

// Embeds each unit pair into the quaternion (x) octonion algebra, multiplies
// there, reads the result back as (coeff, index) with coefficient i realized
// as left multiplication by i_1, and diffs against the transcribed table.
TableDiff verify_table_against_oracle();

// ---- peculiarity classification ----

struct TernaryInfo {
    std::array<int, 3> triple;
    bool imaginary_coeff = false;    // some in-ternary product has coefficient ±i
    bool contains_peculiar = false;
};

struct PeculiarReport {
    std::set<int> peculiar;       // members of every imaginary-coefficient ternary
    std::set<int> semi_peculiar;  // sign-conservation breakers (see classify_peculiar)
    std::vector<TernaryInfo> ternaries;
};

// peculiar: elements contained in every imaginary-coefficient ternary.
// semi-peculiar: within a ternary, when a member alpha commutes with both
// others and coeff(u_alpha u_beta) = -coeff(u_alpha u_gamma), the member x
// with the negative coeff(u_alpha u_x) breaks sign conservation.
PeculiarReport classify_peculiar();

// ---- structure constants and the printed partial lists ----

struct StructureConstant {
    int i = 0, j = 0, k = 0;  // u_i u_j = coeff * u_k
    SplitEntry coeff;
};

struct StructureClaim {
    int ijk = 0;                // printed index string, e.g. 145
    std::string printed_class;  // "+1" | "-1" | "+i" | "-i"
    std::string generated;      // coefficient label from the generated table
    int generated_index = 0;    // k from the generated table for the (i,j) pair
    bool match = false;
    bool contradiction = false;  // same string printed under a second class
};

struct StructureConstantReport {
    std::vector<StructureConstant> table;  // all 42 ordered pairs i != j, i,j in 1..7
    std::vector<StructureClaim> claims;    // the printed claims, in printed order
    std::vector<int> contradictions;       // index strings with conflicting printed classes
    std::vector<int> omitted;              // generated ijk strings absent from the print
};

StructureConstantReport structure_constants();

// ---- nonassociativity witness (u_1, u_2, u_6) ----

struct NonassocWitness {
    SplitOctonion<> lhs;    // (u_1 u_2) u_6
    SplitOctonion<> rhs;    // u_1 (u_2 u_6)
    SplitOctonion<> assoc;  // lhs - rhs
};

NonassocWitness nonassociativity_witness();

// ---- split composition-law counterexample ----

struct NormCounterexample {
    bool found = false;
    SplitOctonion<> a, b;
    Rational norm_ab;        // norm_sq(a*b)
    Rational norm_a_norm_b;  // norm_sq(a)*norm_sq(b)
    std::uint64_t pairs_scanned = 0;
};

// Exhaustive scan over real coefficients in {-1,0,1}, lexicographic with c_0
// outermost and -1 < 0 < 1; returns the first violating pair. found == false
// would mean the whole 3^16 space composes, which callers must report loudly.
NormCounterexample split_norm_counterexample();

}  // namespace splitoct
