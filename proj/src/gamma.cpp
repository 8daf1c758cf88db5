#include "splitoct/gamma.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace splitoct {

SquareMatrix SquareMatrix::identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    SquareMatrix r(n);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    SquareMatrix r(n);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    SquareMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const GaussianRational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
        }
    return r;
}

bool SquareMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

bool SquareMatrix::is_scalar(const GaussianRational& s) const {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j ? at(i, j) != s : !at(i, j).is_zero()) return false;
        }
    return true;
}

SquareMatrix operator*(const GaussianRational& s, const SquareMatrix& m) {
    SquareMatrix r(m.n);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = s * m.a[i];
    return r;
}

SquareMatrix to_square(const Matrix2& m) {
    SquareMatrix r(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r.at(i, j) = m.m[i][j];
    return r;
}

SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r(a.n * b.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            const GaussianRational& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.n; ++k)
                for (std::size_t l = 0; l < b.n; ++l)
                    r.at(i * b.n + k, j * b.n + l) = aij * b.at(k, l);
        }
    return r;
}

BigCube to_big_cube(const CubicMatrix& c) {
    BigCube r(2);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            for (std::size_t z = 0; z < 2; ++z) r.at(x, y, z) = c.e[x][y][z];
    return r;
}

BigCube kron_cubic(const BigCube& a, const BigCube& b) {
    BigCube r(a.n * b.n);
    for (std::size_t x1 = 0; x1 < a.n; ++x1)
        for (std::size_t y1 = 0; y1 < a.n; ++y1)
            for (std::size_t z1 = 0; z1 < a.n; ++z1) {
                const GaussianRational& v = a.at(x1, y1, z1);
                if (v.is_zero()) continue;
                for (std::size_t x2 = 0; x2 < b.n; ++x2)
                    for (std::size_t y2 = 0; y2 < b.n; ++y2)
                        for (std::size_t z2 = 0; z2 < b.n; ++z2)
                            r.at(x1 * b.n + x2, y1 * b.n + y2, z1 * b.n + z2) =
                                v * b.at(x2, y2, z2);
            }
    return r;
}

SquareMatrix project(const BigCube& c, Axis axis) {
    SquareMatrix r(c.n);
    for (std::size_t p = 0; p < c.n; ++p)
        for (std::size_t q = 0; q < c.n; ++q) {
            GaussianRational s;
            for (std::size_t t = 0; t < c.n; ++t) {
                switch (axis) {
                    case Axis::I: s = s + c.at(p, q, t); break;
                    case Axis::II: s = s + c.at(p, t, q); break;
                    case Axis::III: s = s + c.at(t, p, q); break;
                }
            }
            r.at(p, q) = s;
        }
    return r;
}

std::string policy_name(ProjectionPolicy p) {
    switch (p) {
        case ProjectionPolicy::AxisI: return "axis-i";
        case ProjectionPolicy::Distribution: return "distribution";
        case ProjectionPolicy::Explicit: return "explicit";
    }
    return "?";
}

std::optional<Matrix2> resolve_factor(const SigmaAssignment& a, int elem,
                                      ProjectionPolicy policy, Axis* chosen) {
    Axis axis = Axis::I;
    if (policy == ProjectionPolicy::Distribution) {
        bool found = false;
        for (const auto& block : ternary_distribution_table()) {
            for (const auto& ref : block) {
                if (ref.elem == elem) {
                    axis = ref.axis;
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        // element 0 never appears in the distribution; its only printed
        // projection is along axis I
    } else if (policy == ProjectionPolicy::Explicit) {
        // take whichever projection the supplied assignment carries,
        // preferring axis I, then II, then III
        for (Axis cand : {Axis::I, Axis::II, Axis::III}) {
            if (a.projection(SigmaRef{elem, cand})) {
                axis = cand;
                break;
            }
        }
    }
    if (chosen) *chosen = axis;
    return a.projection(SigmaRef{elem, axis});
}

namespace {

struct FactorSpec {
    int index;
    GaussianRational scalar;
    std::array<GammaFactor, 3> factors;
};

GammaSet build_from_specs(const SigmaAssignment& a, ProjectionPolicy policy, GammaCase which,
                          const std::vector<FactorSpec>& specs, bool index0_is_identity) {
    GammaSet g;
    g.which = which;
    g.policy = policy;
    for (auto& e : g.entries) e.present = false;

    if (index0_is_identity) {
        GammaEntry& e0 = g.entries[0];
        e0.index = 0;
        e0.present = true;
        e0.scalar = GaussianRational(1);
        e0.matrix = SquareMatrix::identity(8);
    }

    for (const FactorSpec& spec : specs) {
        GammaEntry& e = g.entries[static_cast<std::size_t>(spec.index)];
        e.index = spec.index;
        e.scalar = spec.scalar;
        e.factors = spec.factors;
        std::array<Matrix2, 3> mats;
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) {
            Axis chosen = Axis::I;
            std::optional<Matrix2> m = resolve_factor(
                a, spec.factors[static_cast<std::size_t>(k)].elem, policy, &chosen);
            e.factors[static_cast<std::size_t>(k)].axis = chosen;
            if (!m) {
                std::ostringstream os;
                os << "projection ("
                   << spec.factors[static_cast<std::size_t>(k)].elem << ","
                   << axis_name(chosen) << ") not assigned";
                e.absent_reason = os.str();
                ok = false;
            } else {
                mats[static_cast<std::size_t>(k)] = *m;
            }
        }
        if (!ok) continue;
        e.present = true;
        e.matrix = spec.scalar *
                   kron(kron(to_square(mats[0]), to_square(mats[1])), to_square(mats[2]));
    }
    return g;
}

}  // namespace

GammaSet build_case1(const SigmaAssignment& a, ProjectionPolicy policy) {
    const GaussianRational minus(-1);
    auto F = [](int e1, int e2, int e3) {
        return std::array<GammaFactor, 3>{GammaFactor{e1, Axis::I}, GammaFactor{e2, Axis::I},
                                          GammaFactor{e3, Axis::I}};
    };
    std::vector<FactorSpec> specs = {
        {1, minus, F(1, 1, 2)}, {2, minus, F(1, 2, 2)}, {3, minus, F(1, 3, 2)},
        {4, minus, F(2, 4, 2)}, {5, minus, F(3, 5, 2)}, {6, minus, F(2, 6, 2)},
        {7, minus, F(3, 7, 2)},
    };
    return build_from_specs(a, policy, GammaCase::One, specs, true);
}

GammaSet build_case2(const SigmaAssignment& a, ProjectionPolicy policy) {
    const GaussianRational one(1);
    const GaussianRational im = GaussianRational::unit_i();
    auto F = [](int e1, int e2, int e3) {
        return std::array<GammaFactor, 3>{GammaFactor{e1, Axis::I}, GammaFactor{e2, Axis::I},
                                          GammaFactor{e3, Axis::I}};
    };
    std::vector<FactorSpec> specs = {
        {0, one, F(0, 1, 0)}, {1, im, F(1, 2, 1)}, {2, im, F(1, 2, 2)}, {3, im, F(1, 2, 3)},
        {4, im, F(2, 2, 4)}, {5, im, F(3, 2, 5)}, {6, im, F(2, 2, 6)}, {7, im, F(3, 2, 7)},
    };
    return build_from_specs(a, policy, GammaCase::Two, specs, false);
}

GammaSet build_gammas(GammaCase which, const SigmaAssignment& a, ProjectionPolicy policy) {
    return which == GammaCase::One ? build_case1(a, policy) : build_case2(a, policy);
}

std::vector<int> GammaSet::present_indices() const {
    std::vector<int> out;
    for (int k = 0; k < 8; ++k)
        if (entries[static_cast<std::size_t>(k)].present) out.push_back(k);
    return out;
}

CliffordReport clifford_report(const GammaSet& g) {
    std::vector<int> present = g.present_indices();
    if (present.size() < 2)
        throw std::invalid_argument("anticommutation report needs at least two matrices");

    CliffordReport rep;
    for (int k : present) {
        const SquareMatrix& m = g.entry(k).matrix;
        SquareMatrix sq = m * m;
        CliffordReport::SquareStatus st;
        st.index = k;
        GaussianRational diag0 = sq.at(0, 0);
        st.is_scalar = sq.is_scalar(diag0);
        st.value = st.is_scalar ? diag0 : GaussianRational(0);
        rep.squares.push_back(std::move(st));
    }

    std::vector<std::vector<bool>> anti(present.size(), std::vector<bool>(present.size(), false));
    for (std::size_t i = 0; i < present.size(); ++i)
        for (std::size_t j = i + 1; j < present.size(); ++j) {
            const SquareMatrix& A = g.entry(present[i]).matrix;
            const SquareMatrix& B = g.entry(present[j]).matrix;
            CliffordReport::PairStatus ps;
            ps.a = present[i];
            ps.b = present[j];
            ps.anticommutator = A * B + B * A;
            ps.is_zero = ps.anticommutator.is_zero();
            anti[i][j] = anti[j][i] = ps.is_zero;
            rep.pairs.push_back(std::move(ps));
        }

    // greedy clique of mutually anticommuting scalar-square matrices:
    // seed with the best-connected index, extend in index order
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < present.size(); ++i)
        if (rep.squares[i].is_scalar && !rep.squares[i].value.is_zero()) eligible.push_back(i);

    std::vector<std::size_t> best;
    for (std::size_t seed : eligible) {
        std::vector<std::size_t> clique{seed};
        for (std::size_t cand : eligible) {
            if (cand == seed) continue;
            bool ok = true;
            for (std::size_t member : clique)
                if (!anti[member][cand]) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(cand);
        }
        std::sort(clique.begin(), clique.end());
        if (clique.size() > best.size()) best = clique;
    }

    for (std::size_t i : best) {
        rep.subset.push_back(present[i]);
        const GaussianRational& v = rep.squares[i].value;
        bool positive = v.im.is_zero() ? v.re > 0 : false;
        rep.signature.push_back(positive ? "+" : "-");
    }
    return rep;
}

}  // namespace splitoct
