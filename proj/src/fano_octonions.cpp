#include "octaves/fano_octonions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace octaves::fano {
namespace {

using symbolic::Poly;
using Vec8 = std::array<long, 8>;
using PolyVec = std::array<Poly, 8>;

Vec8 unit8(int i) {
    Vec8 v{};
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

long norm8(const Vec8& v) {
    long sum = 0;
    for (long c : v) {
        sum += c * c;
    }
    return sum;
}

Vec8 sub8(const Vec8& a, const Vec8& b) {
    Vec8 out{};
    for (std::size_t i = 0; i < 8; ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

bool zero8(const Vec8& v) {
    return std::all_of(v.begin(), v.end(), [](long c) { return c == 0; });
}

std::string vec8_string(const Vec8& v) {
    std::string out;
    for (std::size_t i = 0; i < 8; ++i) {
        if (v[i] == 0) {
            continue;
        }
        if (v[i] < 0) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        if (std::labs(v[i]) != 1) {
            out += std::to_string(std::labs(v[i]));
        }
        out += "e" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string unit_string(SignedUnit u) { return (u.sign < 0 ? "-e" : "e") + std::to_string(u.index); }

/// e_i, then e_i + e_j and e_i - e_j for j > i.
std::vector<Vec8> pair_candidates() {
    std::vector<Vec8> out;
    for (int i = 0; i < 8; ++i) {
        out.push_back(unit8(i));
        for (int j = i + 1; j < 8; ++j) {
            for (long s : {1L, -1L}) {
                Vec8 v = unit8(i);
                v[static_cast<std::size_t>(j)] = s;
                out.push_back(v);
            }
        }
    }
    return out;
}

PolyVec variables(symbolic::VarId first) {
    PolyVec out;
    for (std::size_t i = 0; i < 8; ++i) {
        out[i] = Poly::variable(static_cast<symbolic::VarId>(first + i));
    }
    return out;
}

Poly poly_norm(const PolyVec& v) {
    Poly sum;
    for (const Poly& c : v) {
        sum += c * c;
    }
    return sum;
}

SignedUnit signed_mul(const MultTable& t, SignedUnit a, SignedUnit b) {
    const SignedUnit p = t(a.index, b.index);
    return {a.sign * b.sign * p.sign, p.index};
}

SignedUnit map_unit(const BasisMap& phi, SignedUnit u) {
    const SignedUnit image = phi[static_cast<std::size_t>(u.index)];
    return {u.sign * image.sign, image.index};
}

} // namespace

std::string vector_string(int vector) {
    std::string out;
    for (int bit = 2; bit >= 0; --bit) {
        out += ((vector >> bit) & 1) ? '1' : '0';
    }
    return out;
}

UnitLabeling::UnitLabeling(std::array<int, 7> vectors) : vectors_(vectors) {
    std::array<bool, 8> seen{};
    for (int v : vectors_) {
        if (v < 1 || v > 7 || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("unit labeling must be a bijection onto the nonzero vectors of GF(2)^3");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

UnitLabeling UnitLabeling::parse(const std::array<std::string, 7>& vectors) {
    std::array<int, 7> values{};
    for (std::size_t i = 0; i < 7; ++i) {
        const std::string& s = vectors[i];
        if (s.size() != 3 || s.find_first_not_of("01") != std::string::npos) {
            throw std::invalid_argument("bad GF(2)^3 vector '" + s + "'");
        }
        values[i] = std::stoi(s, nullptr, 2);
    }
    return UnitLabeling(values);
}

int UnitLabeling::unit_of(int vector) const {
    for (std::size_t i = 0; i < 7; ++i) {
        if (vectors_[i] == vector) {
            return static_cast<int>(i) + 1;
        }
    }
    throw std::invalid_argument("no unit carries vector " + vector_string(vector));
}

std::string UnitLabeling::vector_string(int unit) const { return fano::vector_string(vector_of(unit)); }

std::string UnitLabeling::to_string() const {
    std::string out;
    for (int u = 1; u <= 7; ++u) {
        if (u > 1) {
            out += ", ";
        }
        out += "e" + std::to_string(u) + " = " + vector_string(u);
    }
    return out;
}

OrientedLine::OrientedLine(int a, int b, int c) {
    for (int u : {a, b, c}) {
        if (u < 1 || u > 7) {
            throw std::invalid_argument("oriented line units must be in 1..7");
        }
    }
    if (a == b || b == c || a == c) {
        throw std::invalid_argument("oriented line units must be distinct");
    }
    // Rotate so the smallest unit leads; rotation keeps the cycle.
    if (b < a && b < c) {
        cycle_ = {b, c, a};
    } else if (c < a && c < b) {
        cycle_ = {c, a, b};
    } else {
        cycle_ = {a, b, c};
    }
}

int OrientedLine::orientation(int i, int j) const {
    for (std::size_t p = 0; p < 3; ++p) {
        if (cycle_[p] == i) {
            if (cycle_[(p + 1) % 3] == j) {
                return 1;
            }
            if (cycle_[(p + 2) % 3] == j) {
                return -1;
            }
        }
    }
    return 0;
}

bool OrientedLine::contains(int unit) const { return std::find(cycle_.begin(), cycle_.end(), unit) != cycle_.end(); }

std::array<int, 3> OrientedLine::units() const {
    std::array<int, 3> out = cycle_;
    std::sort(out.begin(), out.end());
    return out;
}

bool OrientedLine::collinear_under(const UnitLabeling& labeling) const {
    return (labeling.vector_of(cycle_[0]) ^ labeling.vector_of(cycle_[1]) ^ labeling.vector_of(cycle_[2])) == 0;
}

std::string OrientedLine::to_string() const {
    return "(e" + std::to_string(cycle_[0]) + ",e" + std::to_string(cycle_[1]) + ",e" + std::to_string(cycle_[2]) + ")";
}

MultTable::MultTable() {
    for (auto& row : entries_) {
        row.fill(SignedUnit{1, 0});
    }
}

MultTable::MultTable(const std::array<std::array<SignedUnit, 8>, 8>& entries) : entries_(entries) {}

std::array<long, 8> MultTable::multiply(const std::array<long, 8>& x, const std::array<long, 8>& y) const {
    std::array<long, 8> out{};
    for (std::size_t i = 0; i < 8; ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < 8; ++j) {
            const SignedUnit p = entries_[i][j];
            out[static_cast<std::size_t>(p.index)] += p.sign * x[i] * y[j];
        }
    }
    return out;
}

std::string MultTable::to_string() const {
    std::ostringstream out;
    out << "     ";
    for (int j = 0; j < 8; ++j) {
        out << "  e" << j;
    }
    out << "\n";
    for (int i = 0; i < 8; ++i) {
        out << "  e" << i << " ";
        for (int j = 0; j < 8; ++j) {
            const std::string cell = unit_string((*this)(i, j));
            out << std::string(4 - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
    return out.str();
}

UnitLabeling standard_labeling() { return UnitLabeling({0b010, 0b100, 0b110, 0b001, 0b011, 0b101, 0b111}); }

namespace {
// Point names p1..p7 of the Fano plane.
constexpr std::array<int, 7> kPoints{0b100, 0b110, 0b001, 0b010, 0b111, 0b011, 0b101};
int point(int i) { return kPoints[static_cast<std::size_t>(i - 1)]; }
} // namespace

UnitLabeling points_labeling() {
    // e1 = p4, e2 = p1, e3 = p2, e4 = p3, e5 = p6, e6 = p7, e7 = p5.
    return UnitLabeling({point(4), point(1), point(2), point(3), point(6), point(7), point(5)});
}

UnitLabeling point_order_labeling() {
    return UnitLabeling({point(1), point(2), point(3), point(4), point(5), point(6), point(7)});
}

std::vector<OrientedLine> standard_rules() {
    // Each rule e_a e_b = e_c is the cycle (a, b, c).
    return {OrientedLine(1, 3, 2), OrientedLine(2, 6, 4), OrientedLine(4, 5, 1), OrientedLine(3, 6, 5),
            OrientedLine(1, 7, 6), OrientedLine(2, 7, 5), OrientedLine(4, 7, 3)};
}

MultTable table_from_oriented_lines(const UnitLabeling& labeling, const std::vector<OrientedLine>& lines) {
    if (lines.size() != 7) {
        throw std::invalid_argument("need exactly 7 oriented lines, got " + std::to_string(lines.size()));
    }
    std::set<std::array<int, 3>> seen;
    for (const OrientedLine& line : lines) {
        if (!line.collinear_under(labeling)) {
            throw std::invalid_argument("triple " + line.to_string() + " is not a Fano line under the labeling");
        }
        if (!seen.insert(line.units()).second) {
            throw std::invalid_argument("line " + line.to_string() + " given twice");
        }
    }
    // Seven distinct lines of a seven-line plane cover all of them.

    MultTable t;
    for (int i = 1; i < 8; ++i) {
        t.set(i, 0, {1, i});
        t.set(0, i, {1, i});
        t.set(i, i, {-1, 0});
    }
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            if (i == j) {
                continue;
            }
            const int k = labeling.unit_of(labeling.vector_of(i) ^ labeling.vector_of(j));
            for (const OrientedLine& line : lines) {
                if (line.contains(i) && line.contains(j)) {
                    t.set(i, j, {line.orientation(i, j), k});
                }
            }
        }
    }
    return t;
}

MultTable cd_octonion_table() {
    const cd::BasisTable basis(3);
    MultTable t;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            t.set(i, j, basis(i, j));
        }
    }
    return t;
}

int encode_entry(SignedUnit u) {
    if (u.index == 0) {
        return u.sign > 0 ? 0 : -8;
    }
    return u.sign * u.index;
}

SignedUnit decode_entry(int code) {
    if (code == -8) {
        return {-1, 0};
    }
    if (code < -7 || code > 7) {
        throw std::invalid_argument("table entry " + std::to_string(code) + " outside [-8, 7]");
    }
    return {code < 0 ? -1 : 1, code < 0 ? -code : code};
}

std::string to_string(Property p) {
    switch (p) {
    case Property::anticommutative: return "anticommutative";
    case Property::units_square_to_minus_one: return "units_square_to_minus_one";
    case Property::norm_composing: return "norm_composing";
    case Property::alternative: return "alternative";
    }
    throw std::invalid_argument("unknown property");
}

void require_well_formed(const MultTable& t) {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const SignedUnit u = t(i, j);
            if ((u.sign != 1 && u.sign != -1) || u.index < 0 || u.index > 7) {
                throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") is not a signed unit");
            }
        }
        if (t(0, i) != SignedUnit{1, i} || t(i, 0) != SignedUnit{1, i}) {
            throw std::invalid_argument("e0 is not the identity on e" + std::to_string(i));
        }
    }
}

PolyVec symbolic_product(const MultTable& t, const PolyVec& x, const PolyVec& y) {
    PolyVec out;
    for (std::size_t i = 0; i < 8; ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < 8; ++j) {
            if (y[j].is_zero()) {
                continue;
            }
            const SignedUnit p = t(static_cast<int>(i), static_cast<int>(j));
            Poly term = x[i] * y[j];
            if (p.sign < 0) {
                out[static_cast<std::size_t>(p.index)] -= term;
            } else {
                out[static_cast<std::size_t>(p.index)] += term;
            }
        }
    }
    return out;
}

ValidationReport validate_table(const MultTable& t) {
    require_well_formed(t);
    ValidationReport report;

    for (int i = 1; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            const SignedUnit ij = t(i, j);
            const SignedUnit ji = t(j, i);
            if (ij.index != ji.index || ij.sign != -ji.sign) {
                if (report.anticommutative) {
                    report.failures.push_back({Property::anticommutative, {unit8(i), unit8(j)},
                                               "e" + std::to_string(i) + "e" + std::to_string(j) + " = " +
                                                   unit_string(ij) + " but e" + std::to_string(j) + "e" +
                                                   std::to_string(i) + " = " + unit_string(ji)});
                }
                report.anticommutative = false;
            }
        }
    }
    for (int i = 1; i < 8; ++i) {
        if (t(i, i) != SignedUnit{-1, 0}) {
            if (report.units_square_to_minus_one) {
                report.failures.push_back({Property::units_square_to_minus_one, {unit8(i)},
                                           "e" + std::to_string(i) + "^2 = " + unit_string(t(i, i))});
            }
            report.units_square_to_minus_one = false;
        }
    }

    const PolyVec x = variables(0);
    const PolyVec y = variables(8);

    const Poly norm_residual = poly_norm(symbolic_product(t, x, y)) - poly_norm(x) * poly_norm(y);
    report.norm_residual_terms = norm_residual.size();
    if (!norm_residual.is_zero()) {
        report.norm_composing = false;
        const auto candidates = pair_candidates();
        bool found = false;
        for (const Vec8& a : candidates) {
            for (const Vec8& b : candidates) {
                const long lhs = norm8(t.multiply(a, b));
                const long rhs = norm8(a) * norm8(b);
                if (!found && lhs != rhs) {
                    report.failures.push_back({Property::norm_composing, {a, b},
                                               "N((" + vec8_string(a) + ")(" + vec8_string(b) + ")) = " +
                                                   std::to_string(lhs) + " but N(x)N(y) = " + std::to_string(rhs)});
                    found = true;
                }
            }
        }
    }

    const PolyVec xx = symbolic_product(t, x, x);
    const PolyVec left_a = symbolic_product(t, xx, y);
    const PolyVec left_b = symbolic_product(t, x, symbolic_product(t, x, y));
    const PolyVec right_a = symbolic_product(t, symbolic_product(t, y, x), x);
    const PolyVec right_b = symbolic_product(t, y, xx);
    std::size_t residual_terms = 0;
    for (std::size_t k = 0; k < 8; ++k) {
        residual_terms += (left_a[k] - left_b[k]).size() + (right_a[k] - right_b[k]).size();
    }
    report.alternative_residual_terms = residual_terms;
    if (residual_terms != 0) {
        report.alternative = false;
        std::vector<Vec8> xs;
        for (int i = 0; i < 8; ++i) {
            xs.push_back(unit8(i));
            for (int j = i + 1; j < 8; ++j) {
                Vec8 v = unit8(i);
                v[static_cast<std::size_t>(j)] = 1;
                xs.push_back(v);
            }
        }
        bool found = false;
        for (const Vec8& a : xs) {
            for (int k = 0; k < 8 && !found; ++k) {
                const Vec8 b = unit8(k);
                const Vec8 aa = t.multiply(a, a);
                const Vec8 left = sub8(t.multiply(aa, b), t.multiply(a, t.multiply(a, b)));
                const Vec8 right = sub8(t.multiply(t.multiply(b, a), a), t.multiply(b, aa));
                if (!zero8(left) || !zero8(right)) {
                    report.failures.push_back({Property::alternative, {a, b},
                                               "x = " + vec8_string(a) + ", y = " + vec8_string(b) +
                                                   ": (xx)y - x(xy) = " + vec8_string(left) +
                                                   ", (yx)x - y(xx) = " + vec8_string(right)});
                    found = true;
                }
            }
        }
    }
    return report;
}

QuaternionReport quaternion_subalgebra(const MultTable& t, const OrientedLine& line) {
    require_well_formed(t);
    const auto [a, b, c] = line.units();
    if (t(a, b).index != c || t(b, c).index != a || t(c, a).index != b) {
        throw std::invalid_argument(line.to_string() + " is not a line of the table");
    }
    const std::array<int, 4> span{0, a, b, c};
    auto in_span = [&](int k) { return std::find(span.begin(), span.end(), k) != span.end(); };

    QuaternionReport report;
    report.closed = true;
    for (int i : span) {
        for (int j : span) {
            if (!in_span(t(i, j).index)) {
                report.closed = false;
            }
        }
    }
    report.associative = report.closed;
    for (int i : span) {
        for (int j : span) {
            for (int k : span) {
                const SignedUnit left = signed_mul(t, signed_mul(t, {1, i}, {1, j}), {1, k});
                const SignedUnit right = signed_mul(t, {1, i}, signed_mul(t, {1, j}, {1, k}));
                if (left != right) {
                    report.associative = false;
                }
            }
        }
    }

    // Orient so that p q = +r, then send (p, q, r) to the quaternion units (e1, e2, e3).
    std::array<int, 3> ijk{a, b, c};
    if (t(a, b).sign < 0) {
        ijk = {b, a, c};
    }
    report.ijk = ijk;
    const cd::BasisTable quaternions(2);
    std::array<int, 8> to_h{};
    to_h.fill(-1);
    to_h[0] = 0;
    to_h[static_cast<std::size_t>(ijk[0])] = 1;
    to_h[static_cast<std::size_t>(ijk[1])] = 2;
    to_h[static_cast<std::size_t>(ijk[2])] = 3;
    report.isomorphic_to_H = report.closed;
    for (int i : span) {
        for (int j : span) {
            const SignedUnit p = t(i, j);
            if (!in_span(p.index)) {
                continue;
            }
            const SignedUnit expected = quaternions(to_h[static_cast<std::size_t>(i)], to_h[static_cast<std::size_t>(j)]);
            if (expected != SignedUnit{p.sign, to_h[static_cast<std::size_t>(p.index)]}) {
                report.isomorphic_to_H = false;
            }
        }
    }
    return report;
}

MultTable recode(const MultTable& t, const UnitLabeling& from, const UnitLabeling& to) {
    std::array<int, 8> perm{};
    for (int u = 1; u < 8; ++u) {
        perm[static_cast<std::size_t>(u)] = to.unit_of(from.vector_of(u));
    }
    MultTable out;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const SignedUnit p = t(i, j);
            out.set(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)],
                    {p.sign, perm[static_cast<std::size_t>(p.index)]});
        }
    }
    return out;
}

std::vector<OrientedLine> oriented_lines_of(const MultTable& t) {
    std::set<std::array<int, 3>> seen;
    std::vector<OrientedLine> out;
    for (int i = 1; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            const SignedUnit p = t(i, j);
            if (p.index == 0 || p.index == i || p.index == j) {
                continue;
            }
            OrientedLine line = p.sign > 0 ? OrientedLine(i, j, p.index) : OrientedLine(j, i, p.index);
            if (seen.insert(line.units()).second) {
                out.push_back(line);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const OrientedLine& a, const OrientedLine& b) { return a.units() < b.units(); });
    return out;
}

std::optional<BasisMap> find_isomorphism(const MultTable& t) {
    if (!validate_table(t).all()) {
        throw std::invalid_argument("table does not validate as an octonion algebra");
    }
    const MultTable target = cd_octonion_table();

    const int g1 = 1;
    const int g2 = 2;
    const int g12 = t(g1, g2).index;
    int g3 = 1;
    while (g3 == g1 || g3 == g2 || g3 == g12) {
        ++g3;
    }

    auto candidates = [](const std::vector<int>& excluded) {
        std::vector<SignedUnit> out;
        for (int k = 1; k < 8; ++k) {
            if (std::find(excluded.begin(), excluded.end(), k) == excluded.end()) {
                out.push_back({1, k});
                out.push_back({-1, k});
            }
        }
        return out;
    };

    for (SignedUnit a : candidates({})) {
        for (SignedUnit b : candidates({a.index})) {
            const int ab = target(a.index, b.index).index;
            for (SignedUnit c : candidates({a.index, b.index, ab})) {
                BasisMap phi{};
                std::array<bool, 8> set{};
                phi[0] = {1, 0};
                set[0] = true;
                bool consistent = true;
                auto assign = [&](SignedUnit source, SignedUnit image) {
                    // phi(source) = image, with source possibly negative.
                    const SignedUnit value{source.sign * image.sign, image.index};
                    auto& slot = phi[static_cast<std::size_t>(source.index)];
                    if (set[static_cast<std::size_t>(source.index)]) {
                        consistent = consistent && slot == value;
                    } else {
                        slot = value;
                        set[static_cast<std::size_t>(source.index)] = true;
                    }
                };
                assign({1, g1}, a);
                assign({1, g2}, b);
                assign({1, g3}, c);
                // Products of the generators reach the remaining four units.
                const SignedUnit p12 = t(g1, g2);
                assign(p12, signed_mul(target, a, b));
                assign(t(g1, g3), signed_mul(target, a, c));
                assign(t(g2, g3), signed_mul(target, b, c));
                assign(signed_mul(t, p12, {1, g3}), signed_mul(target, map_unit(phi, p12), c));
                if (!consistent || !std::all_of(set.begin(), set.end(), [](bool s) { return s; })) {
                    continue;
                }
                std::array<bool, 8> hit{};
                for (const SignedUnit& u : phi) {
                    hit[static_cast<std::size_t>(u.index)] = true;
                }
                if (!std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
                    continue;
                }
                bool preserves = true;
                for (int i = 0; i < 8 && preserves; ++i) {
                    for (int j = 0; j < 8 && preserves; ++j) {
                        preserves = map_unit(phi, t(i, j)) == signed_mul(target, phi[static_cast<std::size_t>(i)],
                                                                      phi[static_cast<std::size_t>(j)]);
                    }
                }
                if (preserves) {
                    return phi;
                }
            }
        }
    }
    return std::nullopt;
}

SweepResult sweep_orientations(const UnitLabeling& labeling, const std::vector<OrientedLine>& base) {
    if (base.size() >= 32) {
        throw std::invalid_argument("too many lines to sweep");
    }
    SweepResult result;
    const unsigned count = 1U << base.size();
    for (unsigned mask = 0; mask < count; ++mask) {
        std::vector<OrientedLine> lines;
        for (std::size_t l = 0; l < base.size(); ++l) {
            lines.push_back(((mask >> l) & 1U) ? base[l].reversed() : base[l]);
        }
        ++result.assignments;
        if (validate_table(table_from_oriented_lines(labeling, lines)).all()) {
            ++result.valid;
            result.valid_masks.push_back(mask);
        }
    }
    return result;
}

std::string fano_to_dot(const MultTable& t, const UnitLabeling& labeling) {
    std::ostringstream out;
    out << "digraph fano {\n";
    out << "  node [shape=circle];\n";
    for (int u = 1; u < 8; ++u) {
        out << "  e" << u << " [label=\"e" << u << "\\n" << labeling.vector_string(u) << "\"];\n";
    }
    const auto lines = oriented_lines_of(t);
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const auto& cyc = lines[l].cycle();
        for (std::size_t p = 0; p < 3; ++p) {
            out << "  e" << cyc[p] << " -> e" << cyc[(p + 1) % 3] << " [label=\"L" << (l + 1) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace octaves::fano
