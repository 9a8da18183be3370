#include "octaves/finite_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace octaves::geometry {
namespace {

int mod(long value, int q) {
    long r = value % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

int inverse_mod(int a, int q) {
    // q is prime: a^(q-2).
    long result = 1;
    long base = mod(a, q);
    for (int e = q - 2; e > 0; e >>= 1) {
        if (e & 1) {
            result = result * base % q;
        }
        base = base * base % q;
    }
    return static_cast<int>(result);
}

void require_field(int q) {
    if (!is_prime(q)) {
        throw std::invalid_argument("field order must be prime, got " + std::to_string(q));
    }
}

int first_nonzero(const GFVector& v) {
    for (int i = 0; i < v.dim(); ++i) {
        if (v[i] != 0) {
            return i;
        }
    }
    return -1;
}

int dot(const GFVector& a, const GFVector& b) {
    long sum = 0;
    for (int i = 0; i < a.dim(); ++i) {
        sum += static_cast<long>(a[i]) * b[i];
    }
    return mod(sum, a.q());
}

/// Calls visit(v) for every vector of V(n, q) in lexicographic order.
template <typename Visit>
void for_each_vector(int n, int q, Visit visit) {
    std::vector<int> coords(static_cast<std::size_t>(n), 0);
    while (true) {
        visit(GFVector(q, coords));
        int i = n - 1;
        while (i >= 0 && ++coords[static_cast<std::size_t>(i)] == q) {
            coords[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) {
            return;
        }
    }
}

Subspace orthogonal_complement(const Subspace& s) {
    std::vector<GFVector> generators;
    for_each_vector(s.ambient_dim(), s.q(), [&](const GFVector& x) {
        for (const GFVector& b : s.basis()) {
            if (dot(x, b) != 0) {
                return;
            }
        }
        generators.push_back(x);
    });
    return Subspace::span(s.q(), s.ambient_dim(), generators);
}

} // namespace

bool is_prime(int q) {
    if (q < 2) {
        return false;
    }
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            return false;
        }
    }
    return true;
}

GFVector::GFVector(int q, std::vector<int> coords) : q_(q), coords_(std::move(coords)) {
    for (int c : coords_) {
        if (c < 0 || c >= q_) {
            throw std::invalid_argument("coordinate " + std::to_string(c) + " outside [0, q)");
        }
    }
}

GFVector GFVector::parse(int q, const std::string& text) {
    std::vector<int> coords;
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("bad vector string '" + text + "'");
        }
        coords.push_back(ch - '0');
    }
    return GFVector(q, std::move(coords));
}

bool GFVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

std::string GFVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (q_ > 10 && i > 0) {
            out += ',';
        }
        out += std::to_string(coords_[i]);
    }
    return out;
}

GFVector operator+(const GFVector& a, const GFVector& b) {
    if (a.q_ != b.q_ || a.coords_.size() != b.coords_.size()) {
        throw std::invalid_argument("vectors from different spaces");
    }
    std::vector<int> out(a.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (a.coords_[i] + b.coords_[i]) % a.q_;
    }
    return GFVector(a.q_, std::move(out));
}

GFVector operator*(int scalar, const GFVector& v) {
    std::vector<int> out(v.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = mod(static_cast<long>(scalar) * v.coords_[i], v.q_);
    }
    return GFVector(v.q_, std::move(out));
}

Subspace::Subspace(int q, int ambient_dim, std::vector<GFVector> rref_basis)
    : q_(q), ambient_dim_(ambient_dim), basis_(std::move(rref_basis)) {}

Subspace Subspace::zero(int q, int ambient_dim) {
    require_field(q);
    return Subspace(q, ambient_dim, {});
}

Subspace Subspace::span(int q, int ambient_dim, const std::vector<GFVector>& generators) {
    require_field(q);
    std::vector<std::vector<int>> rows;
    for (const GFVector& g : generators) {
        if (g.q() != q || g.dim() != ambient_dim) {
            throw std::invalid_argument("generator outside V(" + std::to_string(ambient_dim) + ", " +
                                        std::to_string(q) + ")");
        }
        rows.push_back(g.coords());
    }

    // Gauss-Jordan elimination mod q.
    std::size_t rank = 0;
    for (int col = 0; col < ambient_dim && rank < rows.size(); ++col) {
        auto c = static_cast<std::size_t>(col);
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        const int inv = inverse_mod(rows[rank][c], q);
        for (int& x : rows[rank]) {
            x = mod(static_cast<long>(x) * inv, q);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) {
                continue;
            }
            const int factor = rows[r][c];
            for (std::size_t j = 0; j < rows[r].size(); ++j) {
                rows[r][j] = mod(rows[r][j] - static_cast<long>(factor) * rows[rank][j], q);
            }
        }
        ++rank;
    }
    rows.resize(rank);

    std::vector<GFVector> basis;
    basis.reserve(rank);
    for (auto& row : rows) {
        basis.emplace_back(q, std::move(row));
    }
    return Subspace(q, ambient_dim, std::move(basis));
}

bool Subspace::contains(const GFVector& v) const {
    if (v.q() != q_ || v.dim() != ambient_dim_) {
        return false;
    }
    std::vector<int> rest = v.coords();
    for (const GFVector& row : basis_) {
        const int p = first_nonzero(row);
        const int factor = rest[static_cast<std::size_t>(p)];
        if (factor == 0) {
            continue;
        }
        for (int j = 0; j < ambient_dim_; ++j) {
            auto jj = static_cast<std::size_t>(j);
            rest[jj] = mod(rest[jj] - static_cast<long>(factor) * row[j], q_);
        }
    }
    return std::all_of(rest.begin(), rest.end(), [](int c) { return c == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const GFVector& v) { return contains(v); });
}

std::vector<GFVector> Subspace::points() const {
    std::vector<GFVector> out;
    const int k = dim();
    std::vector<int> scalars(static_cast<std::size_t>(k), 0);
    while (true) {
        GFVector v(q_, std::vector<int>(static_cast<std::size_t>(ambient_dim_), 0));
        for (int i = 0; i < k; ++i) {
            v = v + scalars[static_cast<std::size_t>(i)] * basis_[static_cast<std::size_t>(i)];
        }
        out.push_back(std::move(v));
        int i = k - 1;
        while (i >= 0 && ++scalars[static_cast<std::size_t>(i)] == q_) {
            scalars[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> Subspace::point_strings() const {
    std::vector<std::string> out;
    for (const GFVector& v : points()) {
        out.push_back(v.to_string());
    }
    return out;
}

std::vector<std::string> Subspace::nonzero_point_strings() const {
    std::vector<std::string> out;
    for (const GFVector& v : points()) {
        if (!v.is_zero()) {
            out.push_back(v.to_string());
        }
    }
    return out;
}

std::string Subspace::label() const {
    std::string out = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += basis_[i].to_string();
    }
    return out + ">";
}

std::vector<Subspace> enumerate_subspaces(int n, int q, int k) {
    require_field(q);
    if (n < 0 || n > kMaxEnumerationDim) {
        throw std::invalid_argument("ambient dimension must be in [0, " + std::to_string(kMaxEnumerationDim) +
                                    "], got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        throw std::invalid_argument("subspace dimension must be in [0, n], got " + std::to_string(k));
    }

    std::vector<Subspace> out;
    // Choose pivot columns (ascending), then fill every free RREF entry:
    // positions right of a row's pivot that are not themselves pivot columns.
    std::vector<int> pivots(static_cast<std::size_t>(k));
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int p : pivots) {
            is_pivot[static_cast<std::size_t>(p)] = true;
        }
        std::vector<std::pair<int, int>> free_slots;
        for (int r = 0; r < k; ++r) {
            for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
                if (!is_pivot[static_cast<std::size_t>(c)]) {
                    free_slots.emplace_back(r, c);
                }
            }
        }

        std::vector<int> values(free_slots.size(), 0);
        while (true) {
            std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
            for (int r = 0; r < k; ++r) {
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
            }
            for (std::size_t s = 0; s < free_slots.size(); ++s) {
                auto [r, c] = free_slots[s];
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = values[s];
            }
            std::vector<GFVector> basis;
            basis.reserve(rows.size());
            for (auto& row : rows) {
                basis.emplace_back(q, std::move(row));
            }
            out.push_back(Subspace(q, n, std::move(basis)));

            std::size_t s = values.size();
            while (s > 0 && ++values[s - 1] == q) {
                values[s - 1] = 0;
                --s;
            }
            if (s == 0) {
                break;
            }
        }

        // Next pivot combination in lexicographic order.
        int i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    std::sort(out.begin(), out.end());
    return out;
}

std::size_t SubspaceLattice::node_count() const {
    std::size_t total = 0;
    for (const auto& rank : nodes) {
        total += rank.size();
    }
    return total;
}

SubspaceLattice build_lattice(int n, int q) {
    require_field(q);
    if (n < 0 || n > kMaxLatticeDim) {
        throw std::invalid_argument("lattice dimension must be in [0, " + std::to_string(kMaxLatticeDim) +
                                    "], got " + std::to_string(n));
    }
    SubspaceLattice lattice;
    lattice.n = n;
    lattice.q = q;
    for (int k = 0; k <= n; ++k) {
        lattice.nodes.push_back(enumerate_subspaces(n, q, k));
    }
    for (int k = 0; k < n; ++k) {
        const auto& lower = lattice.nodes[static_cast<std::size_t>(k)];
        const auto& upper = lattice.nodes[static_cast<std::size_t>(k + 1)];
        for (std::size_t i = 0; i < lower.size(); ++i) {
            for (std::size_t j = 0; j < upper.size(); ++j) {
                if (upper[j].contains(lower[i])) {
                    lattice.covers.push_back({{k, static_cast<int>(i)}, {k + 1, static_cast<int>(j)}});
                }
            }
        }
    }
    return lattice;
}

std::vector<std::vector<int>> IncidenceStructure::pencils() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(point_count));
    for (std::size_t l = 0; l < lines.size(); ++l) {
        for (int p : lines[l]) {
            out[static_cast<std::size_t>(p)].push_back(static_cast<int>(l));
        }
    }
    return out;
}

IncidenceStructure IncidenceStructure::dual() const {
    IncidenceStructure d;
    d.point_count = static_cast<int>(lines.size());
    d.lines = pencils();
    return d;
}

PlaneAxioms check_plane_axioms(const IncidenceStructure& s, int order) {
    const int expected = order * order + order + 1;
    PlaneAxioms axioms;
    axioms.point_count = s.point_count == expected;
    axioms.line_count = static_cast<int>(s.lines.size()) == expected;
    axioms.points_per_line = std::all_of(s.lines.begin(), s.lines.end(), [&](const auto& line) {
        return static_cast<int>(line.size()) == order + 1;
    });
    const auto pencils = s.pencils();
    axioms.lines_per_point = std::all_of(pencils.begin(), pencils.end(), [&](const auto& pencil) {
        return static_cast<int>(pencil.size()) == order + 1;
    });

    auto shared = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        return common.size();
    };
    axioms.unique_joining_line = true;
    for (std::size_t a = 0; a < pencils.size(); ++a) {
        for (std::size_t b = a + 1; b < pencils.size(); ++b) {
            if (shared(pencils[a], pencils[b]) != 1) {
                axioms.unique_joining_line = false;
            }
        }
    }
    axioms.unique_meeting_point = true;
    for (std::size_t a = 0; a < s.lines.size(); ++a) {
        for (std::size_t b = a + 1; b < s.lines.size(); ++b) {
            if (shared(s.lines[a], s.lines[b]) != 1) {
                axioms.unique_meeting_point = false;
            }
        }
    }
    return axioms;
}

std::string ProjectiveSpace::point_label(int point) const {
    return points[static_cast<std::size_t>(point)].basis().front().to_string();
}

std::vector<std::string> ProjectiveSpace::line_labels(int line) const {
    std::vector<std::string> out;
    for (int p : incidence.lines[static_cast<std::size_t>(line)]) {
        out.push_back(point_label(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ProjectiveSpace projective_space(int n, int q) {
    require_field(q);
    if (n + 1 < 2 || n + 1 > kMaxLatticeDim) {
        throw std::invalid_argument("projective dimension must satisfy 2 <= n+1 <= " +
                                    std::to_string(kMaxLatticeDim) + ", got n = " + std::to_string(n));
    }
    ProjectiveSpace ps;
    ps.n = n;
    ps.q = q;
    ps.points = enumerate_subspaces(n + 1, q, 1);
    ps.lines = enumerate_subspaces(n + 1, q, 2);
    ps.incidence.point_count = static_cast<int>(ps.points.size());
    for (const Subspace& line : ps.lines) {
        std::vector<int> on_line;
        for (std::size_t p = 0; p < ps.points.size(); ++p) {
            if (line.contains(ps.points[p])) {
                on_line.push_back(static_cast<int>(p));
            }
        }
        ps.incidence.lines.push_back(std::move(on_line));
    }
    return ps;
}

DualityReport duality_check(const ProjectiveSpace& ps) {
    if (ps.n != 2) {
        throw std::invalid_argument("duality check needs a projective plane, got PG(" + std::to_string(ps.n) +
                                    ", " + std::to_string(ps.q) + ")");
    }
    DualityReport report;
    report.pencil = ps.incidence.pencils();
    report.dual_axioms = check_plane_axioms(ps.incidence.dual(), ps.q);

    auto index_of = [](const std::vector<Subspace>& list, const Subspace& s) {
        auto it = std::find(list.begin(), list.end(), s);
        return it == list.end() ? -1 : static_cast<int>(it - list.begin());
    };
    for (const Subspace& p : ps.points) {
        report.point_to_line.push_back(index_of(ps.lines, orthogonal_complement(p)));
    }
    for (const Subspace& l : ps.lines) {
        report.line_to_point.push_back(index_of(ps.points, orthogonal_complement(l)));
    }

    bool polarity = true;
    for (std::size_t p = 0; p < ps.points.size(); ++p) {
        const int image = report.point_to_line[p];
        if (image < 0 || report.line_to_point[static_cast<std::size_t>(image)] != static_cast<int>(p)) {
            polarity = false;
        }
    }
    if (polarity) {
        for (std::size_t l = 0; l < ps.lines.size(); ++l) {
            const auto& on_l = ps.incidence.lines[l];
            const int l_image = report.line_to_point[l];
            for (std::size_t p = 0; p < ps.points.size(); ++p) {
                const bool incident = std::binary_search(on_l.begin(), on_l.end(), static_cast<int>(p));
                const auto& on_p_image = ps.incidence.lines[static_cast<std::size_t>(report.point_to_line[p])];
                const bool dual_incident = std::binary_search(on_p_image.begin(), on_p_image.end(), l_image);
                if (incident != dual_incident) {
                    polarity = false;
                }
            }
        }
    }
    report.is_self_dual_plane = polarity && report.dual_axioms.all() &&
                                check_plane_axioms(ps.incidence, ps.q).all();
    return report;
}

std::string lattice_to_dot(const SubspaceLattice& lattice) {
    std::ostringstream out;
    out << "graph hasse_L" << lattice.n << "_" << lattice.q << " {\n";
    out << "  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < lattice.nodes.size(); ++k) {
        out << "  { rank=same;";
        for (std::size_t i = 0; i < lattice.nodes[k].size(); ++i) {
            out << " d" << k << "_" << i;
        }
        out << "; }\n";
        for (std::size_t i = 0; i < lattice.nodes[k].size(); ++i) {
            out << "  d" << k << "_" << i << " [label=\"" << lattice.nodes[k][i].label() << "\"];\n";
        }
    }
    for (const auto& [lower, upper] : lattice.covers) {
        out << "  d" << lower.dim << "_" << lower.index << " -- d" << upper.dim << "_" << upper.index << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string incidence_to_dot(const ProjectiveSpace& ps) {
    std::ostringstream out;
    out << "graph PG" << ps.n << "_" << ps.q << " {\n";
    out << "  node [shape=circle];\n";
    for (std::size_t p = 0; p < ps.points.size(); ++p) {
        out << "  p" << p << " [label=\"" << ps.point_label(static_cast<int>(p)) << "\"];\n";
    }
    out << "  node [shape=box];\n";
    for (std::size_t l = 0; l < ps.lines.size(); ++l) {
        out << "  l" << l << " [label=\"" << ps.lines[l].label() << "\"];\n";
    }
    for (std::size_t l = 0; l < ps.incidence.lines.size(); ++l) {
        for (int p : ps.incidence.lines[l]) {
            out << "  p" << p << " -- l" << l << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace octaves::geometry
