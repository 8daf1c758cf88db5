#include "splitoct/split_table.hpp"

#include <stdexcept>

namespace splitoct {

namespace {

struct PrintedProduct {
    int a, b;        // ordered pair as printed, a < b
    int re, im;      // coefficient
    int index;       // resulting unit
    bool marked;     // anticommutative marking
};

// Upper-triangle products of the unit table, transcribed verbatim.
// Marked pairs anticommute; every unmarked pair commutes.
constexpr PrintedProduct PRINTED[] = {
    {1, 2, 0, 1, 3, true},   {1, 3, 0, -1, 2, true},  {1, 4, 1, 0, 5, false},
    {1, 5, 1, 0, 4, false},  {1, 6, -1, 0, 7, false}, {1, 7, -1, 0, 6, false},
    {2, 3, 0, 1, 1, true},   {2, 4, 0, 1, 6, false},  {2, 5, 0, 1, 7, false},
    {2, 6, 0, -1, 4, false}, {2, 7, 0, 1, 5, false},
    {3, 4, 1, 0, 7, false},  {3, 5, 1, 0, 6, false},  {3, 6, 1, 0, 5, false},
    {3, 7, 1, 0, 4, false},
    {4, 5, 1, 0, 1, false},  {4, 6, 0, 1, 2, true},   {4, 7, 1, 0, 3, false},
    {5, 6, 1, 0, 3, false},  {5, 7, 0, 1, 2, true},
    {6, 7, -1, 0, 1, false},
};

struct Table {
    SplitEntry entry[8][8];
};

const Table& table() {
    static const Table t = [] {
        Table out;
        for (int b = 0; b < 8; ++b) {
            out.entry[0][b] = {1, 0, b};  // unit row
            out.entry[b][0] = {1, 0, b};
            out.entry[b][b] = {1, 0, 0};  // u_a^2 = u_0
        }
        for (const auto& p : PRINTED) {
            out.entry[p.a][p.b] = {p.re, p.im, p.index};
            if (p.marked)
                out.entry[p.b][p.a] = {-p.re, -p.im, p.index};
            else
                out.entry[p.b][p.a] = {p.re, p.im, p.index};
        }
        return out;
    }();
    return t;
}

void check_index(int a) {
    if (a < 0 || a > 7) throw std::out_of_range("split unit index out of 0..7");
}

}  // namespace

const SplitEntry& split_basis_entry(int a, int b) {
    check_index(a);
    check_index(b);
    return table().entry[a][b];
}

BasisProduct split_mul_basis(int a, int b) {
    const SplitEntry& e = split_basis_entry(a, b);
    return {GaussianRational(e.re, e.im), e.index};
}

const std::vector<std::pair<int, int>>& marked_anticommutative_pairs() {
    static const std::vector<std::pair<int, int>> pairs = [] {
        std::vector<std::pair<int, int>> out;
        for (const auto& p : PRINTED)
            if (p.marked) out.emplace_back(p.a, p.b);
        return out;
    }();
    return pairs;
}

bool pair_is_marked(int a, int b) {
    if (a > b) std::swap(a, b);
    for (const auto& [x, y] : marked_anticommutative_pairs())
        if (x == a && y == b) return true;
    return false;
}

CommutationClass commutation_class(int a, int b) {
    check_index(a);
    check_index(b);
    if (a == b) throw std::invalid_argument("commutation class undefined for equal indices");
    if (a == 0 || b == 0)
        throw std::invalid_argument("commutation class undefined for the unit u_0");
    const SplitEntry& ab = split_basis_entry(a, b);
    const SplitEntry& ba = split_basis_entry(b, a);
    if (ab.index != ba.index)
        throw std::logic_error("generated table has mismatched product indices");
    const bool anti = ab.re == -ba.re && ab.im == -ba.im;
    return anti ? CommutationClass::Anticommutative : CommutationClass::Commutative;
}

std::string coeff_label(const SplitEntry& e) {
    if (e.re == 1 && e.im == 0) return "+1";
    if (e.re == -1 && e.im == 0) return "-1";
    if (e.re == 0 && e.im == 1) return "+i";
    if (e.re == 0 && e.im == -1) return "-i";
    throw std::logic_error("coefficient is not a unit");
}

std::string coeff_label(const GaussianRational& g) {
    SplitEntry e;
    if (g.re == make_rational(1)) e = {1, 0, 0};
    else if (g.re == make_rational(-1)) e = {-1, 0, 0};
    else if (g.im == make_rational(1)) e = {0, 1, 0};
    else if (g.im == make_rational(-1)) e = {0, -1, 0};
    else throw std::logic_error("coefficient is not a unit");
    if (!g.re.is_zero() && !g.im.is_zero()) throw std::logic_error("coefficient is not a unit");
    return coeff_label(e);
}

}  // namespace splitoct
