#include "splitoct/reports.hpp"

#include "splitoct/tensor_ho.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitoct {

namespace {

// Reads a single-term tensor element back as coeff * u_k with
// coeff in {+-1, +-i}, i acting as left multiplication by i_1.
BasisProduct interpret_oracle_product(const TensorHO& prod) {
    int q = -1, e = -1;
    Rational coeff;
    for (int qq = 0; qq < 4; ++qq) {
        for (int ee = 0; ee < 8; ++ee) {
            if (prod.c[qq][ee].is_zero()) continue;
            if (q != -1) throw std::logic_error("oracle product is not a single basis term");
            q = qq;
            e = ee;
            coeff = prod.c[qq][ee];
        }
    }
    if (q == -1) throw std::logic_error("oracle product is zero");
    const int sign = coeff == make_rational(1) ? 1 : coeff == make_rational(-1) ? -1 : 0;
    if (sign == 0) throw std::logic_error("oracle product has non-unit coefficient");

    const TensorHO i1 = TensorHO::basis(1, 0);
    for (int k = 0; k < 8; ++k) {
        const auto& emb = UNIT_EMBEDDING[static_cast<std::size_t>(k)];
        if (q == emb[0] && e == emb[1]) return {GaussianRational(sign, 0), k};
        const TensorHO iu = i1 * TensorHO::unit(k);
        for (int qq = 0; qq < 4; ++qq) {
            for (int ee = 0; ee < 8; ++ee) {
                if (iu.c[qq][ee].is_zero()) continue;
                if (qq == q && ee == e) {
                    // prod = sign*B and i*u_k = ci*B, ci in {+-1}: prod = (sign*ci) i u_k.
                    const int ci = iu.c[qq][ee] == make_rational(1) ? 1 : -1;
                    return {GaussianRational(0, sign * ci), k};
                }
            }
        }
    }
    throw std::logic_error("oracle product outside the embedded unit span");
}

constexpr struct {
    const char* label;
    std::initializer_list<int> strings;
} PRINTED_CONSTANTS[] = {
    {"+1", {145, 154, 347, 356, 365, 374, 451, 473, 563}},
    {"-1", {167, 176, 671}},
    {"+i", {123, 231, 246, 257, 275, 312, 462, 572}},
    {"-i", {246}},
};

}  // namespace

int TableDiff::mismatch_count() const {
    int n = 0;
    for (const auto& r : rows)
        if (!r.match) ++n;
    return n;
}

std::vector<std::pair<int, int>> TableDiff::mismatched_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& r : rows)
        if (!r.match) out.push_back(r.pair);
    return out;
}

TableDiff verify_table_against_oracle() {
    TableDiff diff;
    diff.rows.reserve(64);
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            TableDiffRow row;
            row.pair = {a, b};
            row.expected = split_mul_basis(a, b);
            row.computed = interpret_oracle_product(TensorHO::unit(a) * TensorHO::unit(b));
            row.match = row.expected == row.computed;
            diff.rows.push_back(std::move(row));
        }
    }
    return diff;
}

PeculiarReport classify_peculiar() {
    PeculiarReport rep;
    std::set<int> candidates = {1, 2, 3, 4, 5, 6, 7};

    for (const auto& tr : FANO_TRIPLES) {
        TernaryInfo info;
        info.triple = {tr[0], tr[1], tr[2]};
        for (int a : tr)
            for (int b : tr)
                if (a != b && split_basis_entry(a, b).im != 0) info.imaginary_coeff = true;
        rep.ternaries.push_back(info);
    }

    for (const auto& info : rep.ternaries) {
        if (!info.imaginary_coeff) continue;
        std::set<int> members(info.triple.begin(), info.triple.end());
        std::set<int> keep;
        std::set_intersection(candidates.begin(), candidates.end(), members.begin(),
                              members.end(), std::inserter(keep, keep.begin()));
        candidates = std::move(keep);
    }
    rep.peculiar = candidates;

    for (auto& info : rep.ternaries) {
        for (int p : rep.peculiar)
            if (std::find(info.triple.begin(), info.triple.end(), p) != info.triple.end())
                info.contains_peculiar = true;
    }

    for (const auto& tr : FANO_TRIPLES) {
        for (int slot = 0; slot < 3; ++slot) {
            const int alpha = tr[slot];
            const int beta = tr[(slot + 1) % 3];
            const int gamma = tr[(slot + 2) % 3];
            if (commutation_class(alpha, beta) != CommutationClass::Commutative) continue;
            if (commutation_class(alpha, gamma) != CommutationClass::Commutative) continue;
            const SplitEntry& cb = split_basis_entry(alpha, beta);
            const SplitEntry& cg = split_basis_entry(alpha, gamma);
            if (cb.re != -cg.re || cb.im != -cg.im) continue;
            for (int x : {beta, gamma}) {
                const SplitEntry& cx = split_basis_entry(alpha, x);
                if (cx.re < 0 || cx.im < 0) rep.semi_peculiar.insert(x);
            }
        }
    }
    return rep;
}

StructureConstantReport structure_constants() {
    StructureConstantReport rep;
    std::set<int> generated_strings;
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            if (i == j) continue;
            const SplitEntry& e = split_basis_entry(i, j);
            rep.table.push_back({i, j, e.index, e});
            generated_strings.insert(100 * i + 10 * j + e.index);
        }
    }

    std::set<int> printed_strings;
    std::set<int> contradicted;
    for (const auto& cls : PRINTED_CONSTANTS) {
        for (int ijk : cls.strings) {
            StructureClaim claim;
            claim.ijk = ijk;
            claim.printed_class = cls.label;
            const int i = ijk / 100, j = (ijk / 10) % 10, k = ijk % 10;
            const SplitEntry& e = split_basis_entry(i, j);
            claim.generated = coeff_label(e);
            claim.generated_index = e.index;
            claim.match = e.index == k && claim.generated == claim.printed_class;
            if (printed_strings.count(ijk)) {
                claim.contradiction = true;
                contradicted.insert(ijk);
                for (auto& earlier : rep.claims)
                    if (earlier.ijk == ijk) earlier.contradiction = true;
            }
            printed_strings.insert(ijk);
            rep.claims.push_back(std::move(claim));
        }
    }
    rep.contradictions.assign(contradicted.begin(), contradicted.end());

    for (int s : generated_strings)
        if (!printed_strings.count(s)) rep.omitted.push_back(s);
    return rep;
}

NonassocWitness nonassociativity_witness() {
    using S = SplitOctonion<>;
    const S u1 = S::basis(1), u2 = S::basis(2), u6 = S::basis(6);
    NonassocWitness w;
    w.lhs = (u1 * u2) * u6;
    w.rhs = u1 * (u2 * u6);
    w.assoc = w.lhs - w.rhs;
    return w;
}

namespace {

SplitOctonion<> real_split_from_digits(const std::array<int, 8>& digits) {
    SplitOctonion<> v;
    for (std::size_t k = 0; k < 8; ++k)
        v.c[k] = GaussianRational(digits[k] - 1, 0);  // digit 0,1,2 -> -1,0,1
    return v;
}

bool next_digits(std::array<int, 8>& d) {
    for (int k = 7; k >= 0; --k) {
        if (++d[static_cast<std::size_t>(k)] < 3) return true;
        d[static_cast<std::size_t>(k)] = 0;
    }
    return false;
}

}  // namespace

NormCounterexample split_norm_counterexample() {
    NormCounterexample out;
    std::array<int, 8> da{};
    do {
        const SplitOctonion<> a = real_split_from_digits(da);
        const Rational na = split_norm_sq(a);
        std::array<int, 8> db{};
        do {
            ++out.pairs_scanned;
            const SplitOctonion<> b = real_split_from_digits(db);
            const Rational nab = split_norm_sq(a * b);
            const Rational nanb = na * split_norm_sq(b);
            if (nab != nanb) {
                out.found = true;
                out.a = a;
                out.b = b;
                out.norm_ab = nab;
                out.norm_a_norm_b = nanb;
                return out;
            }
        } while (next_digits(db));
    } while (next_digits(da));
    return out;
}

}  // namespace splitoct
