#include "octaves/acceptance.hpp"

#include "octaves/cayley_dickson.hpp"
#include "octaves/cli.hpp"
#include "octaves/fano_octonions.hpp"
#include "octaves/finite_geometry.hpp"
#include "octaves/identities.hpp"
#include "octaves/qcalc.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

namespace octaves::acceptance {
namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void check(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back("FAILED " + what);
        }
    }
    std::string summary(const std::string& on_success) const {
        if (ok) {
            return on_success;
        }
        std::string out;
        for (const auto& n : notes) {
            out += (out.empty() ? "" : "; ") + n;
        }
        return out;
    }
};

CriterionResult timed(int id, std::string name, double budget, const std::function<std::string(Outcome&)>& body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.budget_seconds = budget;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    std::string success;
    try {
        success = body(outcome);
    } catch (const std::exception& e) {
        outcome.check(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.checks_passed = outcome.ok;
    r.detail = outcome.summary(success);
    return r;
}

using PointSet = std::set<std::string>;

std::set<PointSet> sets_of(const std::vector<std::vector<std::string>>& lists) {
    std::set<PointSet> out;
    for (const auto& l : lists) {
        out.insert(PointSet(l.begin(), l.end()));
    }
    return out;
}

std::string criterion_constants(Outcome& o) {
    using qcalc::gaussian_binomial;
    using qcalc::galois_number;
    o.check(gaussian_binomial(3, 1, 2) == 7, "[3,1]_2 = 7");
    o.check(gaussian_binomial(3, 2, 2) == 7, "[3,2]_2 = 7");
    o.check(galois_number(3, 2) == 16, "G(3,2) = 16");
    o.check(galois_number(2, 2) == 5, "G(2,2) = 5");
    return "[3,1]_2 = [3,2]_2 = 7, G(3,2) = 16, G(2,2) = 5";
}

std::string criterion_qexp(Outcome& o) {
    for (int q : {1, 2, 3, 5}) {
        const auto report = qcalc::verify_qexp_squared(q, 12);
        o.check(report.holds, "q-exp squared identity at q = " + std::to_string(q));
    }
    return "exact through degree 12 for q = 1, 2, 3, 5";
}

std::string criterion_subspace_counts(Outcome& o) {
    int cases = 0;
    for (int q : {2, 3}) {
        for (int n = 0; n <= 5; ++n) {
            for (int k = 0; k <= n; ++k) {
                const auto count = geometry::enumerate_subspaces(n, q, k).size();
                o.check(Integer(static_cast<unsigned long>(count)) == qcalc::gaussian_binomial(n, k, q),
                        "count for n=" + std::to_string(n) + " k=" + std::to_string(k) + " q=" + std::to_string(q));
                ++cases;
            }
        }
    }
    return std::to_string(cases) + " (n, k, q) cases agree";
}

std::string criterion_fano(Outcome& o) {
    const std::vector<std::vector<std::string>> fano_lines{
        {"100", "110", "010"}, {"001", "111", "110"}, {"010", "011", "001"}, {"010", "111", "101"},
        {"100", "111", "011"}, {"011", "101", "110"}, {"100", "101", "001"}};
    std::vector<std::vector<std::string>> fano_planes;
    for (auto line : fano_lines) {
        line.push_back("000");
        fano_planes.push_back(line);
    }
    std::vector<std::vector<std::string>> planes;
    std::vector<std::vector<std::string>> lines;
    for (const auto& s : geometry::enumerate_subspaces(3, 2, 2)) {
        planes.push_back(s.point_strings());
        lines.push_back(s.nonzero_point_strings());
    }
    o.check(planes.size() == 7, "seven planes");
    o.check(sets_of(planes) == sets_of(fano_planes), "planes equal P1..P7");
    o.check(sets_of(lines) == sets_of(fano_lines), "lines equal L1..L7");

    const auto ps = geometry::projective_space(2, 2);
    const auto axioms = geometry::check_plane_axioms(ps.incidence, 2);
    o.check(axioms.point_count, "7 points");
    o.check(axioms.line_count, "7 lines");
    o.check(axioms.points_per_line, "3 points per line");
    o.check(axioms.lines_per_point, "3 lines per point");
    o.check(axioms.unique_joining_line, "unique line through two points");
    o.check(axioms.unique_meeting_point, "two lines meet in one point");
    o.check(geometry::duality_check(ps).is_self_dual_plane, "duality");
    return "P1..P7 and L1..L7 reproduced, six axioms hold, self-dual";
}

std::string criterion_standard_table(Outcome& o) {
    const fano::MultTable t = fano::table_from_oriented_lines(fano::standard_labeling(), fano::standard_rules());
    const std::vector<std::array<int, 3>> rules{{1, 3, 2}, {2, 6, 4}, {4, 5, 1}, {3, 6, 5},
                                                {1, 7, 6}, {2, 7, 5}, {4, 7, 3}};
    for (const auto& [a, b, c] : rules) {
        o.check(t(a, b) == cd::SignedUnit{1, c},
                "e" + std::to_string(a) + "e" + std::to_string(b) + " = +e" + std::to_string(c));
    }
    const fano::ValidationReport v = fano::validate_table(t);
    o.check(v.anticommutative, "anticommutative");
    o.check(v.units_square_to_minus_one, "units square to -1");
    o.check(v.norm_composing, "norm composing (zero polynomial)");
    o.check(v.alternative, "alternative (zero polynomial)");

    const std::vector<std::array<int, 3>> lines{{1, 2, 3}, {4, 7, 3}, {1, 5, 4}, {1, 7, 6},
                                                {2, 7, 5}, {5, 6, 3}, {2, 6, 4}};
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const auto& [a, b, c] = lines[l];
        const auto r = fano::quaternion_subalgebra(t, fano::OrientedLine(a, b, c));
        o.check(r.closed && r.associative && r.isomorphic_to_H, "quaternion subalgebra on L" + std::to_string(l + 1));
    }
    const auto phi = fano::find_isomorphism(t);
    o.check(phi.has_value(), "isomorphism into the Cayley-Dickson octonions");
    return "7 rules reproduced, all four properties hold, 7 quaternion lines, isomorphism found";
}

std::string criterion_identities(Outcome& o) {
    using identities::a_var;
    using identities::b_var;
    using symbolic::Poly;
    for (int n : {1, 2, 4, 8}) {
        const auto id = identities::derive_identity(n);
        o.check(identities::verify_identity(id), std::to_string(n) + "-square residual is zero");
    }
    const fano::MultTable t = fano::table_from_oriented_lines(fano::standard_labeling(), fano::standard_rules());
    o.check(identities::verify_identity(identities::derive_identity(t)), "8-square from the Fano table");

    // (ac - bd, bc + ad) with a = a1, b = a2, c = b1, d = b2.
    const Poly a = Poly::variable(a_var(1));
    const Poly b = Poly::variable(a_var(2));
    const Poly c = Poly::variable(b_var(1));
    const Poly d = Poly::variable(b_var(2));
    const auto two = identities::derive_identity(2);
    o.check(two.forms.size() == 2 && two.forms[0] == a * c - b * d && two.forms[1] == b * c + a * d,
            "two-square forms equal (ac - bd, bc + ad)");

    const auto sixteen = identities::derive_identity(16);
    o.check(!identities::verify_identity(sixteen), "16-square residual is nonzero");
    return "n = 1, 2, 4, 8 verify (CD and Fano), n = 2 matches (ac-bd, bc+ad), n = 16 residual has " +
           std::to_string(sixteen.residual.size()) + " terms";
}

std::string criterion_law_ladder(Outcome& o) {
    constexpr int kTrials = 20;
    auto expect = [&](cd::Law law, int first_failure) {
        for (int level = 0; level <= cd::kMaxLevel; ++level) {
            const auto r = cd::probe_law(level, law, kTrials, 0);
            const std::string what = cd::to_string(law) + " at level " + std::to_string(level);
            if (level < first_failure) {
                o.check(r.holds, what + " holds");
            } else if (level == first_failure) {
                o.check(!r.holds && r.counterexample && r.found_in_basis_pass, what + " fails with a basis witness");
                if (r.counterexample) {
                    o.check(!cd::law_holds_at(law, *r.counterexample), what + " witness re-checks");
                }
            }
        }
    };
    expect(cd::Law::commutative, 2);
    expect(cd::Law::associative, 3);
    expect(cd::Law::norm_composing, 4);
    o.check(cd::probe_law(3, cd::Law::alternative, kTrials, 0).holds, "octonions alternative");
    o.check(cd::probe_law(3, cd::Law::moufang, kTrials, 0).holds, "octonions Moufang");

    const auto zd = cd::find_zero_divisors(4);
    o.check(zd.has_value(), "sedenion zero divisors found");
    if (zd) {
        o.check(!zd->first.is_zero() && !zd->second.is_zero() && (zd->first * zd->second).is_zero(),
                "zero-divisor product is exactly 0");
        return "commutativity fails at 2, associativity at 3, norm composition at 4; zero divisors (" +
               zd->first.to_string() + ")(" + zd->second.to_string() + ") = 0";
    }
    return "";
}

std::string criterion_determinism(Outcome& o) {
    const std::vector<std::vector<std::string>> commands{
        {"galois", "--n", "3", "--q", "2"},
        {"galois", "--n", "4", "--q", "3", "--format", "json"},
        {"galois", "--n", "4", "--k", "2", "--q", "2"},
        {"galois", "--q", "2", "--qexp"},
        {"subspaces", "--n", "3", "--q", "2", "--k", "2"},
        {"subspaces", "--n", "4", "--q", "3", "--k", "2", "--format", "json"},
        {"lattice", "--n", "3", "--q", "2"},
        {"lattice", "--n", "3", "--q", "2", "--format", "json"},
        {"lattice", "--n", "3", "--q", "2", "--format", "dot"},
        {"fano"},
        {"fano", "--format", "json"},
        {"fano", "--format", "dot"},
        {"fano", "--q", "3", "--format", "json"},
        {"octonion-table"},
        {"octonion-table", "--format", "json"},
        {"octonion-table", "--format", "dot"},
        {"octonion-table", "--source", "cd", "--format", "json"},
        {"octonion-table", "--labeling", "point-order"},
        {"validate"},
        {"validate", "--format", "json"},
        {"identity", "--n", "2"},
        {"identity", "--n", "8", "--format", "json"},
        {"identity", "--n", "8", "--source", "standard"},
        {"identity", "--n", "16"},
        {"probe", "--level", "3", "--trials", "10", "--seed", "7"},
        {"probe", "--level", "4", "--law", "norm_composing", "--trials", "5", "--seed", "1", "--format", "json"},
        {"sweep", "--orientations"},
    };
    for (const auto& args : commands) {
        const cli::Captured first = cli::run_captured(args);
        const cli::Captured second = cli::run_captured(args);
        std::string joined;
        for (const auto& a : args) {
            joined += (joined.empty() ? "" : " ") + a;
        }
        o.check(first.out == second.out && first.err == second.err && first.exit_code == second.exit_code &&
                    !first.out.empty(),
                "'" + joined + "' byte-identical");
    }
    return std::to_string(commands.size()) + " commands byte-identical across two runs";
}

} // namespace

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> results;
    results.push_back(timed(1, "Worked constants", 1e-3, criterion_constants));
    results.push_back(timed(2, "q-exp squared identity", 1.0, criterion_qexp));
    results.push_back(timed(3, "Subspace-count law", 2.0, criterion_subspace_counts));
    results.push_back(timed(4, "Fano reproduction", 1e-3, criterion_fano));
    results.push_back(timed(5, "Fano octonion table", 5.0, criterion_standard_table));
    results.push_back(timed(6, "Square identities", 5.0, criterion_identities));
    results.push_back(timed(7, "Law ladder", 10.0, criterion_law_ladder));
    // No runtime budget is stated for determinism.
    results.push_back(timed(8, "Determinism", 30.0, criterion_determinism));
    return results;
}

std::string render(const std::vector<CriterionResult>& results, bool timings) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail;
        if (!r.within_budget()) {
            out << " (over the " << r.budget_seconds << " s budget)";
        }
        if (timings) {
            out << std::fixed << std::setprecision(6) << " [" << r.seconds << " s";
            out.unsetf(std::ios::floatfield);
            out << ", budget " << r.budget_seconds << " s]";
        }
        out << "\n";
    }
    const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
    out << passed << "/" << results.size() << " criteria passed\n";
    return out.str();
}

} // namespace octaves::acceptance
