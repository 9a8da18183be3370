#pragma once

// Vector spaces V(n, q) over prime fields, their subspace lattices, and
// the projective spaces built from them.
//
// Vectors print as coordinate strings with coordinate 1 leftmost, so the
// vector (1, 1, 0) over GF(2) prints as "110". Subspaces are stored by
// their reduced row-echelon basis, which is unique per subspace.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace octaves::geometry {

/// Hard cap on ambient dimension for enumeration.
inline constexpr int kMaxEnumerationDim = 6;
/// Hard cap on ambient dimension for lattices and projective spaces.
inline constexpr int kMaxLatticeDim = 5;

bool is_prime(int q);

class GFVector {
public:
    GFVector(int q, std::vector<int> coords);
    /// Parses "110"-style strings (one digit per coordinate, q <= 10).
    static GFVector parse(int q, const std::string& text);

    int q() const { return q_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    const std::vector<int>& coords() const { return coords_; }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    bool is_zero() const;

    /// "abc" for q <= 10, comma-separated coordinates otherwise.
    std::string to_string() const;

    friend GFVector operator+(const GFVector& a, const GFVector& b);
    friend GFVector operator*(int scalar, const GFVector& v);
    friend bool operator==(const GFVector&, const GFVector&) = default;
    friend auto operator<=>(const GFVector& a, const GFVector& b) { return a.coords_ <=> b.coords_; }

private:
    int q_;
    std::vector<int> coords_;
};

class Subspace {
public:
    /// The span of `generators` inside V(ambient_dim, q), reduced to RREF.
    static Subspace span(int q, int ambient_dim, const std::vector<GFVector>& generators);
    static Subspace zero(int q, int ambient_dim);

    int q() const { return q_; }
    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<GFVector>& basis() const { return basis_; }

    bool contains(const GFVector& v) const;
    bool contains(const Subspace& other) const;

    /// All q^dim vectors, sorted by coordinate string.
    std::vector<GFVector> points() const;
    std::vector<std::string> point_strings() const;
    /// Nonzero points only.
    std::vector<std::string> nonzero_point_strings() const;

    /// Label built from the RREF rows, e.g. "<100,010>"; the zero space is "<>".
    std::string label() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend auto operator<=>(const Subspace& a, const Subspace& b) { return a.basis_ <=> b.basis_; }

private:
    Subspace(int q, int ambient_dim, std::vector<GFVector> rref_basis);
    friend std::vector<Subspace> enumerate_subspaces(int n, int q, int k);

    int q_;
    int ambient_dim_;
    std::vector<GFVector> basis_;
};

/// Every k-dimensional subspace of V(n, q) exactly once, ordered
/// lexicographically by RREF basis. Throws std::invalid_argument for
/// composite q, n outside [0, 6], or k outside [0, n].
std::vector<Subspace> enumerate_subspaces(int n, int q, int k);

struct NodeId {
    int dim;
    int index;
    friend bool operator==(const NodeId&, const NodeId&) = default;
    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct SubspaceLattice {
    int n = 0;
    int q = 0;
    /// nodes[k] are the k-dimensional subspaces in enumeration order.
    std::vector<std::vector<Subspace>> nodes;
    /// (lower, upper) with upper of one higher dimension containing lower.
    std::vector<std::pair<NodeId, NodeId>> covers;

    std::size_t node_count() const;
    const Subspace& at(NodeId id) const { return nodes[static_cast<std::size_t>(id.dim)][static_cast<std::size_t>(id.index)]; }
};

/// All subspaces of V(n, q) with the covering relation. n <= 5.
SubspaceLattice build_lattice(int n, int q);

/// Points and lines given as indices; generic enough to hold a dual.
struct IncidenceStructure {
    int point_count = 0;
    /// Each line as an ascending list of point indices.
    std::vector<std::vector<int>> lines;

    /// For each point, the ascending indices of the lines through it.
    std::vector<std::vector<int>> pencils() const;
    /// Swaps the roles of points and lines.
    IncidenceStructure dual() const;
};

/// Each projective-plane axiom, checked separately.
struct PlaneAxioms {
    bool point_count = false;          // q^2 + q + 1 points
    bool line_count = false;           // q^2 + q + 1 lines
    bool points_per_line = false;      // q + 1 on every line
    bool lines_per_point = false;      // q + 1 through every point
    bool unique_joining_line = false;  // two distinct points share exactly one line
    bool unique_meeting_point = false; // two distinct lines share exactly one point

    bool all() const {
        return point_count && line_count && points_per_line && lines_per_point &&
               unique_joining_line && unique_meeting_point;
    }
};

PlaneAxioms check_plane_axioms(const IncidenceStructure& s, int order);

struct ProjectiveSpace {
    int n = 0; ///< projective dimension; built from V(n + 1, q)
    int q = 0;
    std::vector<Subspace> points; ///< 1-dimensional subspaces
    std::vector<Subspace> lines;  ///< 2-dimensional subspaces
    IncidenceStructure incidence;

    /// Points of a projective point are named by their first nonzero representative.
    std::string point_label(int point) const;
    /// A line as its point labels, sorted.
    std::vector<std::string> line_labels(int line) const;
};

/// PG(n, q) from V(n + 1, q), with 2 <= n + 1 <= 5.
ProjectiveSpace projective_space(int n, int q);

struct DualityReport {
    bool is_self_dual_plane = false;
    /// The dual incidence structure (lines as points, pencils as lines) passes every axiom.
    PlaneAxioms dual_axioms;
    /// pencil[p] = lines through point p; this is the point -> line-set map of the dual.
    std::vector<std::vector<int>> pencil;
    /// Polarity witness: point p maps to the line p^perp and line L maps to the
    /// point L^perp, and p lies on L iff L^perp lies on p^perp.
    std::vector<int> point_to_line;
    std::vector<int> line_to_point;
};

/// Throws std::invalid_argument unless ps is a plane (n == 2).
DualityReport duality_check(const ProjectiveSpace& ps);

/// Hasse diagram in DOT, ranks grouped by dimension.
std::string lattice_to_dot(const SubspaceLattice& lattice);
/// Point/line incidence graph in DOT (bipartite).
std::string incidence_to_dot(const ProjectiveSpace& ps);

} // namespace octaves::geometry
