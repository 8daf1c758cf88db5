#include "splitoct/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitoct/dirac.hpp"
#include "splitoct/gamma.hpp"
#include "splitoct/octonion.hpp"
#include "splitoct/reconstruct.hpp"
#include "splitoct/render.hpp"
#include "splitoct/reports.hpp"
#include "splitoct/serialize.hpp"

namespace splitoct {

namespace {

struct CheckLine {
    std::string name;
    std::string status;  // "pass" | "fail" | "finding"
    std::string detail;
};

struct CommandOutput {
    Json artifact_json;
    std::string artifact_text;
    int exit_code = 0;
};

std::string iso_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string join_args(int argc, const char* const* argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

// Writes the deterministic artifact (no timestamps) to --out when given,
// otherwise prints it; JSON stdout always carries a meta header.
int emit(const CommandOutput& result, const std::string& command_echo, const std::string& format,
         const std::string& out_path, std::ostream& out, std::ostream& err) {
    Json meta{{"command", command_echo}, {"timestamp", iso_timestamp()}};
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "cannot open output file: " << out_path << "\n";
            return 1;
        }
        file << (format == "json" ? dump_json(result.artifact_json) : result.artifact_text);
        if (!file.good()) {
            err << "failed writing output file: " << out_path << "\n";
            return 1;
        }
        if (format == "json") {
            out << dump_json(Json{{"meta", meta}, {"artifact", out_path}});
        } else {
            out << "wrote " << out_path << "\n";
        }
        return result.exit_code;
    }
    if (format == "json") {
        Json top{{"meta", meta}};
        for (const auto& [key, value] : result.artifact_json.items()) top[key] = value;
        out << dump_json(top);
    } else {
        out << result.artifact_text;
    }
    return result.exit_code;
}

std::string check_lines_text(const std::vector<CheckLine>& checks) {
    std::ostringstream os;
    for (const CheckLine& c : checks) {
        os << "check " << c.name << ": " << (c.status == "fail" ? "FAIL" : c.status);
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

Json check_lines_json(const std::vector<CheckLine>& checks) {
    Json arr = Json::array();
    for (const CheckLine& c : checks) {
        Json line{{"name", c.name}, {"status", c.status}};
        if (!c.detail.empty()) line["detail"] = c.detail;
        arr.push_back(std::move(line));
    }
    return arr;
}

// ---- tables ----

Json table_I_json() {
    Json entries = Json::array();
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const SplitEntry& e = split_basis_entry(a, b);
            entries.push_back(Json{{"pair", Json::array({a, b})},
                                   {"coeff", coeff_label(e)},
                                   {"index", e.index},
                                   {"marked", a != b && a > 0 && b > 0 && pair_is_marked(a, b)}});
        }
    return Json{{"entries", entries}};
}

Json sigma_ref_json(const SigmaRef& r) {
    return Json{{"sigma", r.elem}, {"axis", axis_name(r.axis)}};
}

Json table_II_json() {
    Json blocks = Json::array();
    const auto& table = identity_table();
    for (std::size_t b = 0; b < table.size(); ++b) {
        Json identities = Json::array();
        for (const TernaryIdentity& id : table[b])
            identities.push_back(Json{{"tilde1", id.tilde1},
                                      {"f1", sigma_ref_json(id.f1)},
                                      {"tilde2", id.tilde2},
                                      {"f2", sigma_ref_json(id.f2)},
                                      {"coeff", coeff_label(id.coeff)},
                                      {"rhs", sigma_ref_json(id.rhs)}});
        blocks.push_back(Json{{"block", b + 1}, {"identities", identities}});
    }
    return Json{{"blocks", blocks}};
}

Json ternaries_json() {
    Json list = Json::array();
    const auto& table = ternary_distribution_table();
    for (std::size_t b = 0; b < table.size(); ++b) {
        Json slots = Json::array();
        for (const SigmaRef& r : table[b]) slots.push_back(sigma_ref_json(r));
        list.push_back(Json{{"ternary", b + 1}, {"slots", slots}});
    }
    return Json{{"ternaries", list}};
}

CommandOutput cmd_tables(const std::string& which) {
    CommandOutput result;
    if (which == "tableI") {
        result.artifact_json = table_I_json();
        result.artifact_text = render_table_I();
    } else if (which == "tableII") {
        result.artifact_json = table_II_json();
        result.artifact_text = render_table_II();
    } else if (which == "constants") {
        StructureConstantReport report = structure_constants();
        result.artifact_json = json_of(report);
        result.artifact_text = render_constants(report);
    } else {
        result.artifact_json = ternaries_json();
        result.artifact_text = render_ternaries();
    }
    return result;
}

// ---- verify ----

Octonion random_octonion(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    Octonion o;
    for (auto& c : o.c) c = make_rational(num(rng), den(rng));
    return o;
}

void verify_table_I(std::vector<CheckLine>& checks, Json& results, std::string& text) {
    TableDiff diff = verify_table_against_oracle();
    CheckLine line{"table-oracle-diff", "pass", ""};
    if (diff.mismatch_count() > 0) {
        std::ostringstream os;
        os << diff.mismatch_count() << " mismatch(es):";
        for (const auto& [a, b] : diff.mismatched_pairs()) os << " (" << a << "," << b << ")";
        line.status = "finding";
        line.detail = os.str();
    }
    checks.push_back(line);
    results["tableI"] = json_of(diff);
    text += "\n" + render_table_diff(diff);
}

void verify_nonassoc(std::vector<CheckLine>& checks, Json& results, std::string& text) {
    NonassocWitness w = nonassociativity_witness();
    SplitOctonion<> expected_lhs = GaussianRational(0, 1) * SplitOctonion<>::basis(5);
    SplitOctonion<> expected_rhs = GaussianRational(0, -1) * SplitOctonion<>::basis(5);
    bool ok = w.lhs == expected_lhs && w.rhs == expected_rhs && w.assoc == expected_lhs - expected_rhs;
    checks.push_back({"nonassociativity-witness", ok ? "pass" : "fail",
                      "(u1·u2)·u6 = " + render_split_element(w.lhs) +
                          ", u1·(u2·u6) = " + render_split_element(w.rhs)});
    results["nonassoc"] = json_of(w);
    text += "\n" + render_nonassoc(w);
}

void verify_norms(std::vector<CheckLine>& checks, Json& results, std::string& text) {
    std::mt19937_64 rng(0x5eedULL);
    bool compose = true;
    for (int k = 0; k < 1000 && compose; ++k) {
        Octonion a = random_octonion(rng);
        Octonion b = random_octonion(rng);
        compose = norm_sq(a * b) == norm_sq(a) * norm_sq(b);
    }
    checks.push_back({"octonion-composition", compose ? "pass" : "fail",
                      "norm_sq(ab) = norm_sq(a)·norm_sq(b), 1000 random samples"});

    NormCounterexample cex = split_norm_counterexample();
    if (cex.found) {
        checks.push_back({"split-composition-counterexample", "finding",
                          "norm_sq(ab) = " + rational_str(cex.norm_ab) +
                              " vs " + rational_str(cex.norm_a_norm_b)});
    } else {
        checks.push_back({"split-composition-counterexample", "fail",
                          "exhaustive scan found no violation"});
    }
    results["norms"] = json_of(cex);
    text += "\n" + render_norms(cex);
}

void verify_peculiar(std::vector<CheckLine>& checks, Json& results, std::string& text) {
    PeculiarReport report = classify_peculiar();
    bool ok = report.peculiar == std::set<int>{2} && report.semi_peculiar == std::set<int>{6};
    std::set<std::array<int, 3>> imag;
    for (const TernaryInfo& t : report.ternaries)
        if (t.imaginary_coeff) imag.insert(t.triple);
    ok = ok && imag == std::set<std::array<int, 3>>{{1, 2, 3}, {2, 4, 6}, {5, 7, 2}};
    checks.push_back({"peculiar-classification", ok ? "pass" : "fail",
                      "peculiar {2}, semi-peculiar {6}, imaginary ternaries {123, 246, 572}"});
    results["peculiar"] = json_of(report);
    text += "\n" + render_peculiar(report);
}

CommandOutput cmd_verify(const std::string& suite) {
    std::vector<CheckLine> checks;
    Json results = Json::object();
    std::string body;
    if (suite == "all" || suite == "tableI") verify_table_I(checks, results, body);
    if (suite == "all" || suite == "nonassoc") verify_nonassoc(checks, results, body);
    if (suite == "all" || suite == "norms") verify_norms(checks, results, body);
    if (suite == "all" || suite == "peculiar") verify_peculiar(checks, results, body);

    CommandOutput result;
    result.artifact_json = Json{{"checks", check_lines_json(checks)}, {"results", results}};
    result.artifact_text = check_lines_text(checks) + body;
    for (const CheckLine& c : checks)
        if (c.status == "fail") result.exit_code = 1;
    return result;
}

// ---- reconstruct ----

CommandOutput cmd_reconstruct(const std::set<int>& scope) {
    ReconstructResult r = reconstruct(default_anchors(), scope, ExecPolicy::Parallel);
    CommandOutput result;
    result.artifact_json = json_of(r, 64, ExecPolicy::Parallel);
    result.artifact_text = render_reconstruct(r);
    return result;
}

// ---- gamma ----

SigmaAssignment assignment_with_first_solutions() {
    SigmaAssignment a = default_anchors();
    ReconstructResult r =
        reconstruct(a, {1, 2, 3, 4, 5, 6, 7}, ExecPolicy::Parallel);
    for (const BlockSolutions& b : r.blocks) {
        if (b.solutions.empty()) continue;
        for (std::size_t k = 0; k < b.unknowns.size(); ++k)
            a.set_projection(b.unknowns[k], candidate_matrix(b.solutions.front()[k]));
    }
    return a;
}

CommandOutput cmd_gamma(int which_case, const std::string& policy_str,
                        const std::string& assignment_path) {
    ProjectionPolicy policy = ProjectionPolicy::AxisI;
    if (policy_str == "distribution") policy = ProjectionPolicy::Distribution;
    if (policy_str == "explicit") policy = ProjectionPolicy::Explicit;

    SigmaAssignment assignment;
    if (policy == ProjectionPolicy::Explicit) {
        std::ifstream file(assignment_path, std::ios::binary);
        if (!file) throw CLI::ValidationError("--assignment", "cannot read " + assignment_path);
        Json parsed;
        try {
            parsed = Json::parse(file);
            assignment = assignment_from_json(parsed);
        } catch (const std::exception& e) {
            throw CLI::ValidationError("--assignment", e.what());
        }
    } else {
        assignment = assignment_with_first_solutions();
    }

    GammaSet g = build_gammas(which_case == 1 ? GammaCase::One : GammaCase::Two, assignment,
                              policy);
    CommandOutput result;
    result.artifact_json = json_of(g);
    if (g.present_indices().size() >= 2) {
        CliffordReport report = clifford_report(g);
        result.artifact_json["report"] = json_of(report);
        result.artifact_text = render_gamma(g, &report);
    } else {
        result.artifact_json["report"] = nullptr;
        result.artifact_text =
            render_gamma(g, nullptr) + "\nreport unavailable: fewer than two matrices present\n";
    }
    return result;
}

// ---- dirac ----

std::vector<double> parse_reals(const std::string& text, std::size_t count,
                                const std::string& flag) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "not a number: " + part);
        }
        if (used != part.size()) throw CLI::ValidationError(flag, "not a number: " + part);
        values.push_back(v);
    }
    if (values.size() != count) {
        throw CLI::ValidationError(
            flag, "expected " + std::to_string(count) + " comma-separated values");
    }
    return values;
}

CommandOutput cmd_dirac(const std::string& momentum_str, const std::string& interval_str,
                        const std::string& a_str, const std::string& s_str, double hbar) {
    if (!(hbar > 0.0)) throw CLI::ValidationError("--hbar", "must be positive");
    std::vector<double> p = parse_reals(momentum_str, 4, "--momentum");
    std::vector<double> r = parse_reals(interval_str, 4, "--interval");
    FourMomentum P{p[0], p[1], p[2], p[3]};
    FourInterval R{r[0], r[1], r[2], r[3]};
    double D = phase_D(P, R);
    std::complex<double> plane = plane_wave(0.0, -D / hbar);

    std::optional<QuaternionValue> psi;
    if (!a_str.empty() || !s_str.empty()) {
        if (a_str.empty() || s_str.empty())
            throw CLI::ValidationError("--a/--s", "both must be given together");
        std::vector<double> a = parse_reals(a_str, 4, "--a");
        std::vector<double> s = parse_reals(s_str, 3, "--s");
        SolutionParams params{a[0], a[1], a[2], a[3], s[0], s[1], s[2], hbar};
        psi = quaternion_solution(params);
    }

    CommandOutput result;
    result.artifact_json = dirac_json(D, plane, psi);
    result.artifact_text = render_dirac(D, plane, psi);
    return result;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact split-octonion toolkit: unit tables, cubic-matrix reconstruction, "
                 "Kronecker gamma products, solution evaluation"};
    app.name("splitoct");
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write the artifact to this path");

    auto* tables = app.add_subcommand("tables", "print generated tables");
    std::string which = "tableI";
    tables->add_option("--which", which, "tableI | tableII | constants | ternaries")
        ->check(CLI::IsMember({"tableI", "tableII", "constants", "ternaries"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    verify->add_option("--suite", suite, "all | tableI | nonassoc | norms | peculiar")
        ->check(CLI::IsMember({"all", "tableI", "nonassoc", "norms", "peculiar"}))
        ->capture_default_str();

    auto* reconstruct_cmd =
        app.add_subcommand("reconstruct", "search for projection matrices satisfying the "
                                          "ternary identities");
    std::string scope_str = "1,2,3,4,5,6,7";
    reconstruct_cmd->add_option("--scope", scope_str, "comma-separated ternary ids (1..7)")
        ->capture_default_str();

    auto* gamma_cmd = app.add_subcommand("gamma", "build triple Kronecker products and the "
                                                  "anticommutation report");
    int which_case = 0;
    std::string policy = "axis-i";
    std::string assignment_path;
    gamma_cmd->add_option("--case", which_case, "1 | 2")
        ->required()
        ->check(CLI::Range(1, 2));
    gamma_cmd->add_option("--policy", policy, "axis-i | distribution | explicit")
        ->check(CLI::IsMember({"axis-i", "distribution", "explicit"}))
        ->capture_default_str();
    gamma_cmd->add_option("--assignment", assignment_path,
                          "JSON assignment file (explicit policy)");

    auto* dirac_cmd = app.add_subcommand("dirac", "evaluate the phase and solution forms");
    std::string momentum_str, interval_str, a_str, s_str;
    double hbar = 1.0;
    dirac_cmd->add_option("--momentum", momentum_str, "E,p1,p2,p3")->required();
    dirac_cmd->add_option("--interval", interval_str, "t,r1,r2,r3")->required();
    dirac_cmd->add_option("--a", a_str, "a0,a1,a2,a3");
    dirac_cmd->add_option("--s", s_str, "S1,S2,S3");
    dirac_cmd->add_option("--hbar", hbar, "positive constant")->capture_default_str();

    CommandOutput result;
    try {
        app.parse(argc, argv);

        if (tables->parsed()) {
            result = cmd_tables(which);
        } else if (verify->parsed()) {
            result = cmd_verify(suite);
        } else if (reconstruct_cmd->parsed()) {
            std::set<int> scope;
            std::stringstream ss(scope_str);
            std::string part;
            while (std::getline(ss, part, ',')) {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(part, &used);
                } catch (const std::exception&) {
                    throw CLI::ValidationError("--scope", "not a ternary id: " + part);
                }
                if (used != part.size() || v < 1 || v > 7)
                    throw CLI::ValidationError("--scope", "ternary ids must be in 1..7");
                scope.insert(v);
            }
            if (scope.empty()) throw CLI::ValidationError("--scope", "must be nonempty");
            result = cmd_reconstruct(scope);
        } else if (gamma_cmd->parsed()) {
            if (policy == "explicit" && assignment_path.empty())
                throw CLI::ValidationError("--assignment", "required with --policy explicit");
            result = cmd_gamma(which_case, policy, assignment_path);
        } else if (dirac_cmd->parsed()) {
            result = cmd_dirac(momentum_str, interval_str, a_str, s_str, hbar);
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }

    try {
        return emit(result, join_args(argc, argv), format, out_path, out, err);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace splitoct
