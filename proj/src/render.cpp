#include "splitoct/render.hpp"

#include <algorithm>
#include <sstream>

#include "splitoct/split_table.hpp"

namespace splitoct {

namespace {

// Display width of a UTF-8 string whose only multi-byte character is the
// middle dot (0xC2 0xB7).
std::size_t display_width(const std::string& s) {
    return s.size() - static_cast<std::size_t>(std::count(s.begin(), s.end(), '\xc2'));
}

std::string pad(const std::string& s, std::size_t width) {
    std::string out = s;
    std::size_t w = display_width(s);
    if (w < width) out.append(width - w, ' ');
    return out;
}

// "u3", "-u3", "i·u3", "-i·u3"
std::string unit_term(const SplitEntry& e) {
    std::string unit = "u" + std::to_string(e.index);
    if (e.re == 1) return unit;
    if (e.re == -1) return "-" + unit;
    if (e.im == 1) return "i·" + unit;
    return "-i·" + unit;
}

// coefficient prefix for a rendered product right-hand side
std::string coeff_prefix(const SplitEntry& e) {
    if (e.re == 1) return "";
    if (e.re == -1) return "-";
    if (e.im == 1) return "i·";
    return "-i·";
}

std::string term_of(const GaussianRational& g, int k) {
    std::string gs = gaussian_str(g);
    if (k == 0) return gs;
    std::string unit = "u" + std::to_string(k);
    if (gs == "1") return unit;
    if (gs == "-1") return "-" + unit;
    bool composite = gs.find('+') != std::string::npos || gs.find('-', 1) != std::string::npos;
    if (composite) return "(" + gs + ")·" + unit;
    return gs + "·" + unit;
}

std::string tilde_term(int tilde, const SigmaRef& ref) {
    std::string name = sigma_ref_name(ref);
    if (tilde == 0) return name;
    return "~" + std::to_string(tilde) + "(" + name + ")";
}

}  // namespace

std::string render_split_element(const SplitOctonion<>& s) {
    std::string out;
    for (int k = 0; k < 8; ++k) {
        const GaussianRational& c = s.c[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string term = term_of(c, k);
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

std::string render_matrix2(const Matrix2& m) {
    std::ostringstream os;
    os << "[[" << gaussian_str(m.m[0][0]) << ", " << gaussian_str(m.m[0][1]) << "], ["
       << gaussian_str(m.m[1][0]) << ", " << gaussian_str(m.m[1][1]) << "]]";
    return os.str();
}

std::string render_table_I() {
    constexpr std::size_t W = 8;
    std::ostringstream os;
    os << "unit products u_a u_b (rows a, columns b)\n\n";
    os << pad("", W);
    for (int b = 0; b < 8; ++b) os << pad("u" + std::to_string(b), W);
    os << "\n";
    for (int a = 0; a < 8; ++a) {
        os << pad("u" + std::to_string(a), W);
        for (int b = 0; b < 8; ++b) {
            std::string cell = unit_term(split_basis_entry(a, b));
            if (a != b && a > 0 && b > 0 && pair_is_marked(a, b)) cell += "*";
            os << pad(cell, W);
        }
        os << "\n";
    }
    os << "\n* marked pair: the factors anticommute\n";
    return os.str();
}

std::string render_table_II() {
    std::ostringstream os;
    os << "ternary product identities (~r = turn 180 degrees about axis r)\n";
    const auto& table = identity_table();
    for (std::size_t b = 0; b < table.size(); ++b) {
        os << "\n" << (b + 1) << ")\n";
        for (const TernaryIdentity& id : table[b]) {
            os << "  " << tilde_term(id.tilde1, id.f1) << " · "
               << tilde_term(id.tilde2, id.f2) << " = " << coeff_prefix(id.coeff)
               << sigma_ref_name(id.rhs) << "\n";
        }
    }
    return os.str();
}

std::string render_ternaries() {
    std::ostringstream os;
    os << "projection distribution over the seven ternaries\n\n";
    const auto& table = ternary_distribution_table();
    for (std::size_t b = 0; b < table.size(); ++b) {
        os << (b + 1) << ": ";
        for (std::size_t k = 0; k < 3; ++k) {
            if (k) os << ", ";
            os << sigma_ref_name(table[b][k]);
        }
        os << "\n";
    }
    return os.str();
}

std::string render_table_diff(const TableDiff& d) {
    std::ostringstream os;
    os << "unit table vs tensor-embedding oracle (" << d.rows.size() << " ordered pairs)\n\n";
    for (const TableDiffRow& r : d.rows) {
        os << "u" << r.pair.first << "·u" << r.pair.second << " = "
           << coeff_label(r.expected.coeff) << "·u" << r.expected.index;
        if (r.match) {
            os << "  [ok]\n";
        } else {
            os << "  oracle: " << coeff_label(r.computed.coeff) << " u" << r.computed.index
               << "  [FINDING: mismatch]\n";
        }
    }
    os << "\nmismatches: " << d.mismatch_count();
    for (const auto& [a, b] : d.mismatched_pairs()) os << "  (u" << a << ", u" << b << ")";
    os << "\n";
    return os.str();
}

std::string render_constants(const StructureConstantReport& r) {
    std::ostringstream os;
    os << "generated structure constants u_i u_j = c · u_k\n\n";
    for (const StructureConstant& c : r.table)
        os << "  " << c.i << c.j << c.k << ": " << coeff_label(c.coeff) << "\n";
    os << "\nprinted claims\n\n";
    for (const StructureClaim& c : r.claims) {
        os << "  " << c.ijk << " printed " << c.printed_class << ", generated " << c.generated
           << " (index " << c.generated_index << ")";
        if (c.contradiction)
            os << "  [FINDING: printed under conflicting classes]";
        else if (!c.match)
            os << "  [FINDING: mismatch]";
        else
            os << "  [ok]";
        os << "\n";
    }
    os << "\ncontradictions:";
    if (r.contradictions.empty()) os << " none";
    for (int v : r.contradictions) os << " " << v;
    os << "\nomitted from the printed lists:";
    for (int v : r.omitted) os << " " << v;
    os << "\n";
    return os.str();
}

std::string render_peculiar(const PeculiarReport& r) {
    std::ostringstream os;
    os << "ternary coefficient classification\n\n";
    for (const TernaryInfo& t : r.ternaries) {
        os << "  " << t.triple[0] << t.triple[1] << t.triple[2] << ": "
           << (t.imaginary_coeff ? "imaginary coefficients" : "real coefficients");
        if (t.contains_peculiar) os << " (contains a peculiar element)";
        os << "\n";
    }
    os << "\npeculiar:";
    for (int v : r.peculiar) os << " u" << v;
    os << "\nsemi-peculiar:";
    for (int v : r.semi_peculiar) os << " u" << v;
    os << "\n";
    return os.str();
}

std::string render_nonassoc(const NonassocWitness& w) {
    std::ostringstream os;
    os << "(u1·u2)·u6 = " << render_split_element(w.lhs) << "\n"
       << "u1·(u2·u6) = " << render_split_element(w.rhs) << "\n"
       << "associator    = " << render_split_element(w.assoc) << "\n";
    return os.str();
}

std::string render_norms(const NormCounterexample& c) {
    std::ostringstream os;
    if (!c.found) {
        os << "no composition counterexample in the {-1,0,1} coefficient space\n";
        return os.str();
    }
    os << "composition-law counterexample (coefficients in {-1,0,1})\n\n"
       << "  a = " << render_split_element(c.a) << "\n"
       << "  b = " << render_split_element(c.b) << "\n"
       << "  norm_sq(a·b)          = " << rational_str(c.norm_ab) << "\n"
       << "  norm_sq(a)·norm_sq(b) = " << rational_str(c.norm_a_norm_b) << "\n"
       << "  pairs scanned: " << c.pairs_scanned << "\n";
    return os.str();
}

std::string render_table_ii_check(const TableIICheck& c) {
    std::ostringstream os;
    os << "ternary identity check (" << c.rows.size() << " identities)\n\n";
    for (const TableIICheckRow& r : c.rows) {
        os << "  block " << r.block << " #" << r.index << ": ";
        if (r.match)
            os << "ok\n";
        else
            os << "MISMATCH lhs=" << render_matrix2(r.lhs) << " rhs=" << render_matrix2(r.rhs)
               << "\n";
    }
    os << "\nall identities hold: " << (c.all_match() ? "yes" : "no") << "\n";
    return os.str();
}

std::string render_reconstruct(const ReconstructResult& r) {
    std::ostringstream os;
    os << "constraint search over signed generalized permutation candidates\n\nscope:";
    for (int s : r.scope) os << " " << s;
    os << "\n";
    for (const BlockSolutions& b : r.blocks) {
        os << "\nternary " << b.ternary << ": ";
        if (b.unknowns.empty()) {
            os << "fully anchored, "
               << (b.solutions.empty() ? "identities FAIL" : "identities hold") << "\n";
            continue;
        }
        os << b.solutions.size() << " solution(s) for (";
        for (std::size_t k = 0; k < b.unknowns.size(); ++k) {
            if (k) os << ", ";
            os << sigma_ref_name(b.unknowns[k]);
        }
        os << ")\n";
        if (b.solutions.empty()) os << "  [FINDING: unsatisfiable in the candidate space]\n";
        for (const auto& tuple : b.solutions) {
            os << "  ";
            for (std::size_t k = 0; k < tuple.size(); ++k) {
                if (k) os << ", ";
                os << sigma_ref_name(b.unknowns[k]) << " = "
                   << render_matrix2(candidate_matrix(tuple[k])) << " (#" << tuple[k] << ")";
            }
            os << "\n";
        }
    }
    os << "\ntotal assignments: " << r.assignment_count() << "\n";
    return os.str();
}

namespace {

std::string render_square(const SquareMatrix& m, const std::string& indent) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.n; ++r) {
        os << indent << "[";
        for (std::size_t c = 0; c < m.n; ++c) {
            if (c) os << ", ";
            os << gaussian_str(m.at(r, c));
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace

std::string render_gamma(const GammaSet& g, const CliffordReport* report) {
    std::ostringstream os;
    os << "triple-product matrices, case " << static_cast<int>(g.which) << ", policy "
       << policy_name(g.policy) << "\n";
    for (const GammaEntry& e : g.entries) {
        os << "\nGamma_" << e.index << ": ";
        if (!e.present) {
            os << "absent (" << e.absent_reason << ")\n";
            continue;
        }
        if (g.which == GammaCase::One && e.index == 0) {
            os << "identity (8x8)\n";
        } else {
            os << gaussian_str(e.scalar) << " · ";
            for (std::size_t k = 0; k < 3; ++k) {
                if (k) os << " ⊗ ";
                os << sigma_ref_name(SigmaRef{e.factors[k].elem, e.factors[k].axis});
            }
            os << "\n";
        }
        os << render_square(e.matrix, "  ");
    }
    if (report) {
        os << "\nsquares:\n";
        for (const auto& s : report->squares) {
            os << "  Gamma_" << s.index << "^2 = ";
            if (s.is_scalar)
                os << gaussian_str(s.value) << " · identity\n";
            else
                os << "(not scalar)\n";
        }
        os << "\nanticommutators:\n";
        for (const auto& p : report->pairs) {
            os << "  {Gamma_" << p.a << ", Gamma_" << p.b << "} = ";
            if (p.is_zero) {
                os << "0\n";
            } else {
                os << "\n" << render_square(p.anticommutator, "    ");
            }
        }
        os << "\nanticommuting family:";
        for (int k : report->subset) os << " Gamma_" << k;
        os << "\nsignature: (";
        for (std::size_t k = 0; k < report->signature.size(); ++k) {
            if (k) os << ",";
            os << report->signature[k];
        }
        os << ")\n";
    }
    return os.str();
}

std::string render_dirac(double D, const std::complex<double>& plane,
                         const std::optional<QuaternionValue>& psi) {
    std::ostringstream os;
    os.precision(15);
    os << "D = " << D << "\n";
    os << "plane wave = " << plane.real() << (plane.imag() < 0 ? " - " : " + ")
       << std::abs(plane.imag()) << "i\n";
    if (psi) {
        os << "psi = (" << psi->w << ", " << psi->x << ", " << psi->y << ", " << psi->z << ")\n";
    }
    return os.str();
}

}  // namespace splitoct
