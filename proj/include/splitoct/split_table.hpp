#pragma once

#include "splitoct/gaussian.hpp"

#include <string>
#include <utility>
#include <vector>

namespace splitoct {

// One split-unit product u_a u_b = coeff * u_index with coeff in {+1,-1,+i,-i},
// stored as a small integer pair (re, im), exactly one of them nonzero.
struct SplitEntry {
    int re = 0;
    int im = 0;
    int index = 0;

    bool operator==(const SplitEntry&) const = default;
};

// Same product with the coefficient as an exact Gaussian scalar.
struct BasisProduct {
    GaussianRational coeff;
    int index = 0;

    bool operator==(const BasisProduct&) const = default;
};

enum class CommutationClass { Commutative, Anticommutative };

// u_a u_b from the transcribed unit product table (a, b in 0..7).
// The table stores the printed upper-triangle products verbatim; reversed
// pairs are filled in from the anticommutativity markings, u_a^2 = u_0,
// and the first line is read as the unit row u_0 u_b = u_b.
const SplitEntry& split_basis_entry(int a, int b);

BasisProduct split_mul_basis(int a, int b);

// The five marked (anticommuting) pairs, as (a, b) with a < b.
const std::vector<std::pair<int, int>>& marked_anticommutative_pairs();

// Whether the printed table marks (a, b) as anticommutative (order-insensitive).
bool pair_is_marked(int a, int b);

// Derived from the generated table; rejects a == b and index 0,
// where the classification is undefined.
CommutationClass commutation_class(int a, int b);

// "+1" | "-1" | "+i" | "-i" for a unit coefficient.
std::string coeff_label(const SplitEntry& e);
std::string coeff_label(const GaussianRational& g);

}  // namespace splitoct
