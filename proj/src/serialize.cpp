#include "splitoct/serialize.hpp"

#include <stdexcept>

namespace splitoct {

Json json_of(const Rational& r) { return Json::array({rational_num(r), rational_den(r)}); }

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
    return make_rational(j[0].get<long long>(), j[1].get<long long>());
}

Json json_of(const GaussianRational& g) {
    return Json{{"re", json_of(g.re)}, {"im", json_of(g.im)}};
}

GaussianRational gaussian_from_json(const Json& j) {
    return GaussianRational(rational_from_json(j.at("re")), rational_from_json(j.at("im")));
}

Json json_of(const Octonion& o) {
    Json coeffs = Json::array();
    for (const Rational& c : o.c) coeffs.push_back(json_of(c));
    return Json{{"basis", "octonion"}, {"coeffs", coeffs}};
}

Json json_of(const SplitOctonion<>& s) {
    Json coeffs = Json::array();
    for (const GaussianRational& c : s.c) coeffs.push_back(json_of(c));
    return Json{{"basis", "split_octonion"}, {"coeffs", coeffs}};
}

Json json_of(const Matrix2& m) {
    Json rows = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c) row.push_back(json_of(m.m[r][c]));
        rows.push_back(row);
    }
    return rows;
}

Matrix2 matrix2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("matrix must be 2x2");
    Matrix2 m;
    for (int r = 0; r < 2; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != 2) throw std::invalid_argument("matrix must be 2x2");
        for (int c = 0; c < 2; ++c)
            m.m[r][c] = gaussian_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

Json json_of(const CubicMatrix& cube) {
    Json xs = Json::array();
    for (int x = 0; x < 2; ++x) {
        Json ys = Json::array();
        for (int y = 0; y < 2; ++y) {
            Json zs = Json::array();
            for (int z = 0; z < 2; ++z) zs.push_back(json_of(cube.e[x][y][z]));
            ys.push_back(zs);
        }
        xs.push_back(ys);
    }
    return xs;
}

CubicMatrix cubic_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("cube must be 2x2x2");
    CubicMatrix cube;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                cube.e[x][y][z] = gaussian_from_json(j.at(static_cast<std::size_t>(x))
                                                         .at(static_cast<std::size_t>(y))
                                                         .at(static_cast<std::size_t>(z)));
    return cube;
}

Json json_of(const SquareMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.n; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.n; ++c) row.push_back(json_of(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json json_of(const SigmaAssignment& a) {
    Json projections = Json::array();
    for (int elem = 0; elem < 8; ++elem) {
        for (int ax = 1; ax <= 3; ++ax) {
            SigmaRef ref{elem, axis_from_int(ax)};
            const auto& p = a.projection(ref);
            if (!p) continue;
            projections.push_back(
                Json{{"sigma", elem}, {"axis", axis_name(ref.axis)}, {"matrix", json_of(*p)}});
        }
    }
    Json cubes = Json::array();
    for (int elem = 0; elem < 8; ++elem) {
        const auto& c = a.cubes[static_cast<std::size_t>(elem)];
        if (!c) continue;
        cubes.push_back(Json{{"sigma", elem}, {"entries", json_of(*c)}});
    }
    return Json{{"projections", projections}, {"cubes", cubes}};
}

namespace {

Axis axis_from_string(const std::string& s) {
    if (s == "I") return Axis::I;
    if (s == "II") return Axis::II;
    if (s == "III") return Axis::III;
    throw std::invalid_argument("axis must be I, II, or III");
}

}  // namespace

SigmaAssignment assignment_from_json(const Json& j) {
    SigmaAssignment a;
    for (const Json& p : j.at("projections")) {
        int elem = p.at("sigma").get<int>();
        if (elem < 0 || elem > 7) throw std::invalid_argument("sigma index out of 0..7");
        SigmaRef ref{elem, axis_from_string(p.at("axis").get<std::string>())};
        a.set_projection(ref, matrix2_from_json(p.at("matrix")));
    }
    if (j.contains("cubes")) {
        for (const Json& c : j.at("cubes")) {
            int elem = c.at("sigma").get<int>();
            if (elem < 0 || elem > 7) throw std::invalid_argument("sigma index out of 0..7");
            a.set_cube(elem, cubic_from_json(c.at("entries")));
        }
    }
    return a;
}

Json json_of(const TableDiff& d) {
    Json rows = Json::array();
    for (const TableDiffRow& r : d.rows) {
        Json row{{"pair", Json::array({r.pair.first, r.pair.second})},
                 {"coeff", coeff_label(r.expected.coeff)},
                 {"index", r.expected.index},
                 {"match", r.match}};
        if (!r.match)
            row["oracle"] =
                Json{{"coeff", coeff_label(r.computed.coeff)}, {"index", r.computed.index}};
        rows.push_back(std::move(row));
    }
    Json mism = Json::array();
    for (const auto& [a, b] : d.mismatched_pairs()) mism.push_back(Json::array({a, b}));
    return Json{{"rows", rows}, {"mismatch_count", d.mismatch_count()}, {"mismatches", mism}};
}

Json json_of(const StructureConstantReport& r) {
    Json table = Json::array();
    for (const StructureConstant& c : r.table)
        table.push_back(Json{{"pair", Json::array({c.i, c.j})},
                             {"coeff", coeff_label(c.coeff)},
                             {"index", c.k}});
    Json claims = Json::array();
    for (const StructureClaim& c : r.claims)
        claims.push_back(Json{{"ijk", c.ijk},
                              {"printed", c.printed_class},
                              {"generated", c.generated},
                              {"generated_index", c.generated_index},
                              {"match", c.match},
                              {"contradiction", c.contradiction}});
    return Json{{"table", table},
                {"claims", claims},
                {"contradictions", r.contradictions},
                {"omitted", r.omitted}};
}

Json json_of(const PeculiarReport& r) {
    Json ternaries = Json::array();
    for (const TernaryInfo& t : r.ternaries)
        ternaries.push_back(Json{{"triple", t.triple},
                                 {"imaginary", t.imaginary_coeff},
                                 {"contains_peculiar", t.contains_peculiar}});
    return Json{{"peculiar", Json(r.peculiar)},
                {"semi_peculiar", Json(r.semi_peculiar)},
                {"ternaries", ternaries}};
}

Json json_of(const NonassocWitness& w) {
    return Json{{"lhs", json_of(w.lhs)}, {"rhs", json_of(w.rhs)}, {"assoc", json_of(w.assoc)}};
}

Json json_of(const NormCounterexample& c) {
    return Json{{"found", c.found},
                {"a", json_of(c.a)},
                {"b", json_of(c.b)},
                {"norm_ab", json_of(c.norm_ab)},
                {"norm_a_norm_b", json_of(c.norm_a_norm_b)},
                {"pairs_scanned", c.pairs_scanned}};
}

Json json_of(const TableIICheck& c) {
    Json rows = Json::array();
    for (const TableIICheckRow& r : c.rows)
        rows.push_back(Json{{"block", r.block},
                            {"index", r.index},
                            {"lhs", json_of(r.lhs)},
                            {"rhs", json_of(r.rhs)},
                            {"match", r.match}});
    Json mism = Json::array();
    for (const auto& [b, i] : c.mismatches()) mism.push_back(Json::array({b, i}));
    return Json{{"rows", rows}, {"all_match", c.all_match()}, {"mismatches", mism}};
}

Json json_of(const ReconstructResult& r, std::uint64_t assignment_limit, ExecPolicy policy) {
    Json blocks = Json::array();
    for (const BlockSolutions& b : r.blocks) {
        Json unknowns = Json::array();
        for (const SigmaRef& u : b.unknowns)
            unknowns.push_back(Json{{"sigma", u.elem}, {"axis", axis_name(u.axis)}});
        blocks.push_back(Json{{"ternary", b.ternary},
                              {"unknowns", unknowns},
                              {"solution_count", b.solutions.size()},
                              {"solutions", b.solutions}});
    }

    Json out{{"scope", r.scope},
             {"anchors", json_of(r.anchors)},
             {"blocks", blocks},
             {"satisfiable", r.satisfiable()},
             {"assignment_count", r.assignment_count()}};

    if (r.satisfiable() && r.assignment_count() <= assignment_limit) {
        Json assignments = Json::array();
        for (const SigmaAssignment& a : r.assignments(assignment_limit)) {
            Json entry{{"projections", json_of(a).at("projections")}};
            LiftReport lift = lift_report(a, policy);
            Json lifted = Json::array();
            for (const LiftOutcome& o : lift.elements) {
                Json cubes = Json::array();
                std::size_t cap = 0;
                for (const CubicMatrix& cube : o.cubes) {
                    if (++cap > 64) break;
                    cubes.push_back(json_of(cube));
                }
                lifted.push_back(Json{
                    {"sigma", o.elem}, {"cube_count", o.cubes.size()}, {"cubes", cubes}});
            }
            entry["lifts"] = lifted;
            assignments.push_back(std::move(entry));
        }
        out["assignments"] = assignments;
    } else {
        out["assignments_omitted"] =
            r.satisfiable() ? "assignment count exceeds materialization limit" : "unsatisfiable";
    }
    return out;
}

Json json_of(const GammaSet& g) {
    Json gammas = Json::array();
    for (const GammaEntry& e : g.entries) {
        Json entry{{"index", e.index}, {"present", e.present}};
        bool from_factors = !(g.which == GammaCase::One && e.index == 0);
        if (from_factors) {
            Json factors = Json::array();
            for (const GammaFactor& f : e.factors)
                factors.push_back(Json{{"sigma", f.elem}, {"axis", axis_name(f.axis)}});
            entry["factors"] = factors;
        }
        if (e.present) {
            if (from_factors) entry["scalar"] = json_of(e.scalar);
            entry["matrix"] = json_of(e.matrix);
        } else {
            entry["reason"] = e.absent_reason;
        }
        gammas.push_back(std::move(entry));
    }
    return Json{{"case", static_cast<int>(g.which)},
                {"policy", policy_name(g.policy)},
                {"gammas", gammas}};
}

Json json_of(const CliffordReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(Json{{"a", p.a},
                             {"b", p.b},
                             {"anticommutator", json_of(p.anticommutator)},
                             {"is_zero", p.is_zero}});
    Json squares = Json::array();
    for (const auto& s : r.squares)
        squares.push_back(
            Json{{"index", s.index}, {"is_scalar", s.is_scalar}, {"value", json_of(s.value)}});
    return Json{
        {"pairs", pairs}, {"squares", squares}, {"signature", r.signature}, {"subset", r.subset}};
}

Json dirac_json(double D, const std::complex<double>& plane,
                const std::optional<QuaternionValue>& psi) {
    Json out{{"D", D}, {"plane", Json{{"re", plane.real()}, {"im", plane.imag()}}}};
    if (psi)
        out["psi"] = Json{{"w", psi->w}, {"x", psi->x}, {"y", psi->y}, {"z", psi->z}};
    return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace splitoct
