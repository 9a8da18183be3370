#include "octaves/cli.hpp"

#include "octaves/acceptance.hpp"
#include "octaves/cayley_dickson.hpp"
#include "octaves/fano_octonions.hpp"
#include "octaves/finite_geometry.hpp"
#include "octaves/formats.hpp"
#include "octaves/identities.hpp"
#include "octaves/qcalc.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace octaves::cli {
namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kTextJson{"text", "json"};
const std::vector<std::string> kTextJsonDot{"text", "json", "dot"};

Json element_json(const cd::CDElement& x) {
    Json coeffs = Json::array();
    for (const Rational& c : x.coeffs()) {
        coeffs.push_back(c.get_str());
    }
    return coeffs;
}

Json axioms_json(const geometry::PlaneAxioms& a) {
    Json j;
    j["point_count"] = a.point_count;
    j["line_count"] = a.line_count;
    j["points_per_line"] = a.points_per_line;
    j["lines_per_point"] = a.lines_per_point;
    j["unique_joining_line"] = a.unique_joining_line;
    j["unique_meeting_point"] = a.unique_meeting_point;
    return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

fano::MultTable table_for(const std::string& source, const std::string& labeling) {
    if (source == "cd") {
        return fano::cd_octonion_table();
    }
    const fano::MultTable standard = fano::table_from_oriented_lines(fano::standard_labeling(), fano::standard_rules());
    if (labeling == "points") {
        return fano::recode(standard, fano::standard_labeling(), fano::points_labeling());
    }
    if (labeling == "point-order") {
        return fano::recode(standard, fano::standard_labeling(), fano::point_order_labeling());
    }
    return standard;
}

fano::UnitLabeling labeling_for(const std::string& name) {
    if (name == "points") {
        return fano::points_labeling();
    }
    if (name == "point-order") {
        return fano::point_order_labeling();
    }
    return fano::standard_labeling();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int cmd_galois(int n, bool n_given, int q, std::optional<int> k, bool qexp, const std::string& format,
               std::ostream& out) {
    if (qexp) {
        const int degree = n_given ? n : 12;
        const qcalc::QExpReport report = qcalc::verify_qexp_squared(q, degree);
        if (format == "json") {
            Json j;
            j["q"] = q;
            j["degree"] = degree;
            j["holds"] = report.holds;
            j["first_failure"] = report.first_failure ? Json(*report.first_failure) : Json(nullptr);
            out << j.dump(2) << "\n";
        } else if (report.holds) {
            out << "q-exp squared identity holds through degree " << degree << " for q = " << q << "\n";
        } else {
            out << "q-exp squared identity fails at degree " << *report.first_failure << " for q = " << q << "\n";
        }
        return report.holds ? 0 : 1;
    }
    if (!n_given) {
        throw std::invalid_argument("--n is required");
    }
    if (k) {
        const Integer value = qcalc::gaussian_binomial(n, *k, q);
        if (format == "json") {
            Json j;
            j["n"] = n;
            j["k"] = *k;
            j["q"] = q;
            j["gaussian_binomial"] = value.get_str();
            out << j.dump(2) << "\n";
        } else {
            out << value.get_str() << "\n";
        }
        return 0;
    }
    const Integer value = qcalc::galois_number(n, q);
    if (format == "json") {
        Json terms = Json::array();
        for (int i = 0; i <= n; ++i) {
            terms.push_back(qcalc::gaussian_binomial(n, i, q).get_str());
        }
        Json j;
        j["n"] = n;
        j["q"] = q;
        j["galois_number"] = value.get_str();
        j["gaussian_binomials"] = std::move(terms);
        out << j.dump(2) << "\n";
    } else {
        out << value.get_str() << "\n";
    }
    return 0;
}

int cmd_subspaces(int n, int q, int k, const std::string& format, std::ostream& out) {
    const auto subspaces = geometry::enumerate_subspaces(n, q, k);
    if (format == "json") {
        out << formats::subspaces_to_json(n, q, k, subspaces) << "\n";
        return 0;
    }
    out << subspaces.size() << " subspaces of dimension " << k << " in V(" << n << "," << q << ")\n";
    for (const auto& s : subspaces) {
        out << s.label() << " = {";
        const auto points = s.point_strings();
        for (std::size_t i = 0; i < points.size(); ++i) {
            out << (i ? ", " : "") << points[i];
        }
        out << "}\n";
    }
    return 0;
}

int cmd_lattice(int n, int q, const std::string& format, std::ostream& out) {
    const geometry::SubspaceLattice lattice = geometry::build_lattice(n, q);
    if (format == "dot") {
        out << geometry::lattice_to_dot(lattice);
        return 0;
    }
    if (format == "json") {
        Json ranks = Json::array();
        for (const auto& rank : lattice.nodes) {
            Json labels = Json::array();
            for (const auto& s : rank) {
                labels.push_back(s.label());
            }
            ranks.push_back(std::move(labels));
        }
        Json covers = Json::array();
        for (const auto& [lower, upper] : lattice.covers) {
            covers.push_back({{lower.dim, lower.index}, {upper.dim, upper.index}});
        }
        Json j;
        j["n"] = n;
        j["q"] = q;
        j["node_count"] = lattice.node_count();
        j["ranks"] = std::move(ranks);
        j["covers"] = std::move(covers);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "L(" << n << "," << q << "): " << lattice.node_count() << " subspaces";
    std::string sep = " = ";
    for (const auto& rank : lattice.nodes) {
        out << sep << rank.size();
        sep = "+";
    }
    out << ", " << lattice.covers.size() << " covering pairs\n";
    return 0;
}

int cmd_fano(int n, int q, const std::string& format, std::ostream& out) {
    const geometry::ProjectiveSpace ps = geometry::projective_space(n, q);
    if (format == "dot") {
        out << geometry::incidence_to_dot(ps);
        return 0;
    }
    std::vector<std::vector<std::string>> lines;
    for (std::size_t l = 0; l < ps.lines.size(); ++l) {
        lines.push_back(ps.line_labels(static_cast<int>(l)));
    }
    std::sort(lines.begin(), lines.end());
    std::vector<std::string> points;
    for (std::size_t p = 0; p < ps.points.size(); ++p) {
        points.push_back(ps.point_label(static_cast<int>(p)));
    }

    bool ok = true;
    std::optional<geometry::PlaneAxioms> axioms;
    std::optional<geometry::DualityReport> duality;
    if (n == 2) {
        axioms = geometry::check_plane_axioms(ps.incidence, q);
        duality = geometry::duality_check(ps);
        ok = axioms->all() && duality->is_self_dual_plane;
    }

    if (format == "json") {
        Json j;
        j["n"] = n;
        j["q"] = q;
        j["points"] = points;
        j["lines"] = lines;
        if (axioms) {
            j["axioms"] = axioms_json(*axioms);
            Json pencils = Json::array();
            for (std::size_t p = 0; p < duality->pencil.size(); ++p) {
                Json pencil = Json::array();
                for (int l : duality->pencil[p]) {
                    pencil.push_back(ps.line_labels(l));
                }
                pencils.push_back({{"point", points[p]}, {"lines", std::move(pencil)}});
            }
            Json polarity = Json::array();
            for (std::size_t p = 0; p < duality->point_to_line.size(); ++p) {
                polarity.push_back({{"point", points[p]}, {"line", ps.line_labels(duality->point_to_line[p])}});
            }
            j["duality"] = {{"is_self_dual_plane", duality->is_self_dual_plane},
                            {"pencils", std::move(pencils)},
                            {"polarity", std::move(polarity)}};
        }
        out << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }

    out << "PG(" << n << "," << q << "): " << points.size() << " points, " << lines.size() << " lines\n";
    for (const auto& line : lines) {
        out << "  {";
        for (std::size_t i = 0; i < line.size(); ++i) {
            out << (i ? ", " : "") << line[i];
        }
        out << "}\n";
    }
    if (axioms) {
        out << "axioms: points " << yes_no(axioms->point_count) << ", lines " << yes_no(axioms->line_count)
            << ", points/line " << yes_no(axioms->points_per_line) << ", lines/point "
            << yes_no(axioms->lines_per_point) << ", joining line " << yes_no(axioms->unique_joining_line)
            << ", meeting point " << yes_no(axioms->unique_meeting_point) << "\n";
        out << "self-dual: " << yes_no(duality->is_self_dual_plane) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_octonion_table(const std::string& source, const std::string& labeling, const std::string& format,
                       std::ostream& out) {
    const fano::MultTable t = table_for(source, labeling);
    if (format == "json") {
        out << formats::table_to_json(t) << "\n";
    } else if (format == "dot") {
        out << fano::fano_to_dot(t, labeling_for(source == "cd" ? "standard" : labeling));
    } else {
        out << t.to_string();
        out << "oriented lines:";
        for (const auto& line : fano::oriented_lines_of(t)) {
            out << " " << line.to_string();
        }
        out << "\n";
    }
    return 0;
}

int cmd_validate(const std::string& source, const std::string& table_path, const std::string& format,
                 std::ostream& out) {
    const fano::MultTable t =
        table_path.empty() ? table_for(source, "standard") : formats::table_from_json(read_file(table_path));
    const fano::ValidationReport r = fano::validate_table(t);
    if (format == "json") {
        Json failures = Json::array();
        for (const auto& w : r.failures) {
            failures.push_back({{"property", fano::to_string(w.property)}, {"elements", w.elements}, {"detail", w.detail}});
        }
        Json j;
        j["anticommutative"] = r.anticommutative;
        j["units_square_to_minus_one"] = r.units_square_to_minus_one;
        j["norm_composing"] = r.norm_composing;
        j["alternative"] = r.alternative;
        j["norm_residual_terms"] = r.norm_residual_terms;
        j["alternative_residual_terms"] = r.alternative_residual_terms;
        j["failures"] = std::move(failures);
        out << j.dump(2) << "\n";
    } else {
        out << "anticommutative: " << yes_no(r.anticommutative) << "\n";
        out << "units square to -1: " << yes_no(r.units_square_to_minus_one) << "\n";
        out << "norm composing: " << yes_no(r.norm_composing) << " (residual terms " << r.norm_residual_terms << ")\n";
        out << "alternative: " << yes_no(r.alternative) << " (residual terms " << r.alternative_residual_terms << ")\n";
        for (const auto& w : r.failures) {
            out << "  " << fano::to_string(w.property) << ": " << w.detail << "\n";
        }
    }
    return r.all() ? 0 : 1;
}

int cmd_identity(int n, const std::string& source, const std::string& format, std::ostream& out, std::ostream& err) {
    identities::NSquareIdentity id;
    if (source == "standard") {
        if (n != 8) {
            throw std::invalid_argument("the Fano table source only yields the 8-square identity");
        }
        id = identities::derive_identity(table_for("standard", "standard"));
    } else {
        id = identities::derive_identity(n);
    }
    if (!identities::verify_identity(id)) {
        if (format == "json") {
            Json j;
            j["n"] = n;
            j["verified"] = false;
            j["residual_terms"] = id.residual.size();
            out << j.dump(2) << "\n";
        } else {
            out << "the " << n << "-square identity fails: residual has " << id.residual.size() << " terms\n";
        }
        err << "identity does not verify\n";
        return 1;
    }
    out << identities::emit_identity(id, format == "json" ? identities::Format::json : identities::Format::text) << "\n";
    return 0;
}

int cmd_probe(int level, const std::string& law_name, int trials, std::uint64_t seed, const std::string& format,
              std::ostream& out) {
    std::vector<cd::Law> laws;
    if (law_name == "all") {
        laws.assign(cd::kAllLaws.begin(), cd::kAllLaws.end());
    } else {
        laws.push_back(cd::parse_law(law_name));
    }
    bool consistent = true;
    Json reports = Json::array();
    std::ostringstream text;
    for (cd::Law law : laws) {
        const cd::LawReport r = cd::probe_law(level, law, trials, seed);
        if (r.counterexample) {
            consistent = consistent && !cd::law_holds_at(law, *r.counterexample);
        }
        Json counterexample = nullptr;
        if (r.counterexample) {
            counterexample = Json::array();
            for (const auto& x : *r.counterexample) {
                counterexample.push_back(element_json(x));
            }
        }
        reports.push_back({{"level", level},
                           {"law", cd::to_string(law)},
                           {"holds", r.holds},
                           {"basis_pass_decisive", r.found_in_basis_pass || r.holds},
                           {"trials", r.random_trials},
                           {"seed", seed},
                           {"counterexample", std::move(counterexample)}});
        text << "level " << level << " " << cd::to_string(law) << ": " << (r.holds ? "holds" : "fails");
        if (r.counterexample) {
            text << " at (";
            for (std::size_t i = 0; i < r.counterexample->size(); ++i) {
                text << (i ? ", " : "") << (*r.counterexample)[i].to_string();
            }
            text << ")";
        }
        text << "\n";
    }
    if (format == "json") {
        out << reports.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return consistent ? 0 : 1;
}

int cmd_sweep(const std::string& labeling, const std::string& format, std::ostream& out) {
    const fano::SweepResult r = fano::sweep_orientations(labeling_for(labeling), fano::standard_rules());
    if (format == "json") {
        Json j;
        j["labeling"] = labeling;
        j["assignments"] = r.assignments;
        j["valid"] = r.valid;
        j["valid_masks"] = r.valid_masks;
        out << j.dump(2) << "\n";
    } else {
        out << r.valid << " of " << r.assignments << " orientation assignments validate\n";
    }
    return 0;
}

int cmd_acceptance(bool timings, const std::string& format, std::ostream& out) {
    const auto results = acceptance::run_all();
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
    if (format == "json") {
        Json list = Json::array();
        for (const auto& r : results) {
            Json j;
            j["id"] = r.id;
            j["name"] = r.name;
            j["passed"] = r.passed();
            j["detail"] = r.detail;
            j["within_budget"] = r.within_budget();
            if (timings) {
                j["seconds"] = r.seconds;
                j["budget_seconds"] = r.budget_seconds;
            }
            list.push_back(std::move(j));
        }
        out << list.dump(2) << "\n";
    } else {
        out << acceptance::render(results, timings);
    }
    return all ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for q-combinatorics, finite geometry and the octonions", "octaves"};
    app.require_subcommand(1);

    std::string format = "text";
    int n = 0;
    int q = 2;
    int k = 0;
    int level = 3;
    int trials = 100;
    std::uint64_t seed = 0;
    std::string law = "all";
    std::string source = "standard";
    std::string labeling = "standard";
    std::string table_path;
    bool qexp = false;
    bool orientations = false;
    bool timings = false;
    std::optional<int> k_opt;

    auto* galois = app.add_subcommand("galois", "Galois numbers, Gaussian binomials and the q-exp squared identity");
    auto* galois_n = galois->add_option("--n", n, "Space dimension (series degree with --qexp)");
    galois->add_option("--q", q, "q >= 1")->required();
    galois->add_option("--k", k_opt, "Print the Gaussian binomial [n,k]_q instead");
    galois->add_flag("--qexp", qexp, "Verify the q-exp squared identity through degree --n (default 12)");
    galois->add_option("--format", format)->check(CLI::IsMember(kTextJson));

    auto* subspaces = app.add_subcommand("subspaces", "List the k-dimensional subspaces of V(n,q)");
    subspaces->add_option("--n", n)->required();
    subspaces->add_option("--q", q)->required();
    subspaces->add_option("--k,--dim", k, "Subspace dimension")->required();
    subspaces->add_option("--format", format)->check(CLI::IsMember(kTextJson));

    auto* lattice = app.add_subcommand("lattice", "Subspace lattice L(n,q) with covering pairs");
    lattice->add_option("--n", n)->required();
    lattice->add_option("--q", q)->required();
    lattice->add_option("--format", format)->check(CLI::IsMember(kTextJsonDot));

    auto* fano = app.add_subcommand("fano", "Projective space PG(n,q); the Fano plane by default");
    int plane_n = 2;
    fano->add_option("--n", plane_n, "Projective dimension")->capture_default_str();
    fano->add_option("--q", q)->capture_default_str();
    fano->add_option("--format", format)->check(CLI::IsMember(kTextJsonDot));

    const std::vector<std::string> labelings{"standard", "points", "point-order"};
    auto* table = app.add_subcommand("octonion-table", "Octonion multiplication table");
    table->add_option("--source", source)->check(CLI::IsMember({"standard", "cd"}));
    table->add_option("--labeling", labeling, "Recode the standard table to this identification")
        ->check(CLI::IsMember(labelings));
    table->add_option("--format", format)->check(CLI::IsMember(kTextJsonDot));

    auto* validate = app.add_subcommand("validate", "Validate an octonion table");
    validate->add_option("--source", source)->check(CLI::IsMember({"standard", "cd"}));
    validate->add_option("--table", table_path, "Table JSON file")->check(CLI::ExistingFile);
    validate->add_option("--format", format)->check(CLI::IsMember(kTextJson));

    auto* identity = app.add_subcommand("identity", "Derive and verify an N-square identity");
    identity->add_option("--n", n)->required()->check(CLI::IsMember({1, 2, 4, 8, 16}));
    std::string identity_source = "cd";
    identity->add_option("--source", identity_source, "cd, or standard for the Fano table (n = 8)")
        ->check(CLI::IsMember({"standard", "cd"}));
    identity->add_option("--format", format)->check(CLI::IsMember(kTextJson));

    auto* probe = app.add_subcommand("probe", "Probe an algebraic law at a Cayley-Dickson level");
    probe->add_option("--level", level)->check(CLI::Range(0, cd::kMaxLevel));
    probe->add_option("--law", law, "Law name or 'all'");
    probe->add_option("--trials", trials)->check(CLI::PositiveNumber);
    probe->add_option("--seed", seed);
    probe->add_option("--format", format)->check(CLI::IsMember(kTextJson));

    auto* sweep = app.add_subcommand("sweep", "Sweep orientation assignments of the standard lines");
    sweep->add_flag("--orientations", orientations, "Sweep all 2^7 line orientations")->required();
    sweep->add_option("--labeling", labeling)->check(CLI::IsMember(labelings));
    sweep->add_option("--format", format)->check(CLI::IsMember(kTextJson));

    auto* accept = app.add_subcommand("acceptance", "Run the acceptance criteria");
    accept->add_flag("--timings", timings, "Append elapsed times (not reproducible)");
    accept->add_option("--format", format)->check(CLI::IsMember(kTextJson));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
    }

    try {
        if (galois->parsed()) {
            return cmd_galois(n, galois_n->count() > 0, q, k_opt, qexp, format, out);
        }
        if (subspaces->parsed()) {
            return cmd_subspaces(n, q, k, format, out);
        }
        if (lattice->parsed()) {
            return cmd_lattice(n, q, format, out);
        }
        if (fano->parsed()) {
            return cmd_fano(plane_n, q, format, out);
        }
        if (table->parsed()) {
            return cmd_octonion_table(source, labeling, format, out);
        }
        if (validate->parsed()) {
            return cmd_validate(source, table_path, format, out);
        }
        if (identity->parsed()) {
            return cmd_identity(n, identity_source, format, out, err);
        }
        if (probe->parsed()) {
            return cmd_probe(level, law, trials, seed, format, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(labeling, format, out);
        }
        if (accept->parsed()) {
            return cmd_acceptance(timings, format, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

Captured run_captured(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    Captured c;
    c.exit_code = run(args, out, err);
    c.out = out.str();
    c.err = err.str();
    return c;
}

} // namespace octaves::cli
