#pragma once

// Octonion multiplication tables coded by the Fano plane.
//
// The seven imaginary units are attached to the seven nonzero vectors of
// GF(2)^3. Three units lie on a Fano line exactly when their vectors XOR to
// 000. Orienting a line as the cycle (a, b, c) fixes ab = c, bc = a,
// ca = b; reversed pairs take the opposite sign.

#include "octaves/cayley_dickson.hpp"
#include "octaves/symbolic.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace octaves::fano {

using cd::SignedUnit;

/// Bijection from units e1..e7 to nonzero 3-bit vectors. Bit 2 of the value
/// is the leftmost character, so 0b110 prints as "110".
class UnitLabeling {
public:
    /// vectors[i] is the vector of e_{i+1}. Throws unless it is a bijection onto 1..7.
    explicit UnitLabeling(std::array<int, 7> vectors);
    static UnitLabeling parse(const std::array<std::string, 7>& vectors);

    int vector_of(int unit) const { return vectors_[static_cast<std::size_t>(unit - 1)]; }
    int unit_of(int vector) const;
    std::string vector_string(int unit) const;
    /// "e1 = 010, e2 = 100, ..."
    std::string to_string() const;

    friend bool operator==(const UnitLabeling&, const UnitLabeling&) = default;

private:
    std::array<int, 7> vectors_;
};

std::string vector_string(int vector);

/// Cyclically ordered triple of distinct imaginary units, stored rotated so the
/// smallest unit comes first.
class OrientedLine {
public:
    OrientedLine(int a, int b, int c);

    const std::array<int, 3>& cycle() const { return cycle_; }
    /// +1 if (i, j) is a successor pair of the cycle, -1 if a predecessor pair, 0 otherwise.
    int orientation(int i, int j) const;
    bool contains(int unit) const;
    OrientedLine reversed() const { return {cycle_[0], cycle_[2], cycle_[1]}; }
    /// The same three units as an ascending set.
    std::array<int, 3> units() const;
    bool collinear_under(const UnitLabeling& labeling) const;
    std::string to_string() const;

    friend bool operator==(const OrientedLine&, const OrientedLine&) = default;

private:
    std::array<int, 3> cycle_;
};

/// 8x8 table of signed units; entry (i, j) is e_i e_j.
class MultTable {
public:
    MultTable();
    explicit MultTable(const std::array<std::array<SignedUnit, 8>, 8>& entries);

    SignedUnit operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    void set(int i, int j, SignedUnit value) { entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value; }
    const std::array<std::array<SignedUnit, 8>, 8>& entries() const { return entries_; }

    /// Exact product of integer coordinate vectors.
    std::array<long, 8> multiply(const std::array<long, 8>& x, const std::array<long, 8>& y) const;

    /// Grid rendering with rows e0..e7, e.g. "-e3".
    std::string to_string() const;

    friend bool operator==(const MultTable&, const MultTable&) = default;

private:
    std::array<std::array<SignedUnit, 8>, 8> entries_;
};

/// The identification e1 = 010, e2 = 100, e3 = 110, e4 = 001, e5 = 011, e6 = 101, e7 = 111.
UnitLabeling standard_labeling();
/// The point-named identification e1 = p4, e2 = p1, e3 = p2, e4 = p3, e7 = p5,
/// e5 = p6, e6 = p7 with p1 = 100, p2 = 110, p3 = 001, p4 = 010, p5 = 111,
/// p6 = 011, p7 = 101. It assigns every unit the same vector as standard_labeling().
UnitLabeling points_labeling();
/// e_i = p_i with the point names above.
UnitLabeling point_order_labeling();

/// e1e3 = e2, e2e6 = e4, e4e5 = e1, e3e6 = e5, e1e7 = e6, e2e7 = e5, e4e7 = e3,
/// each read as an oriented cycle.
std::vector<OrientedLine> standard_rules();

/// Builds the full table. Throws std::invalid_argument unless the lines are
/// seven distinct triples, each collinear under `labeling`.
MultTable table_from_oriented_lines(const UnitLabeling& labeling, const std::vector<OrientedLine>& lines);

/// The level-3 Cayley-Dickson basis products as a table.
MultTable cd_octonion_table();

/// Signed entries in [-8, 7]: s * k encodes s * e_k for k >= 1, 0 encodes +e0
/// and -8 encodes -e0.
int encode_entry(SignedUnit u);
SignedUnit decode_entry(int code);

enum class Property { anticommutative, units_square_to_minus_one, norm_composing, alternative };
std::string to_string(Property p);

struct Witness {
    Property property;
    /// Integer coordinate vectors over e0..e7 on which the property fails.
    std::vector<std::array<long, 8>> elements;
    std::string detail;
};

struct ValidationReport {
    bool anticommutative = true;
    bool units_square_to_minus_one = true;
    bool norm_composing = true;
    bool alternative = true;
    std::vector<Witness> failures;
    /// Terms left in N(xy) - N(x)N(y) after full expansion.
    std::size_t norm_residual_terms = 0;
    /// Terms left in the two alternativity associators after full expansion.
    std::size_t alternative_residual_terms = 0;

    bool all() const { return anticommutative && units_square_to_minus_one && norm_composing && alternative; }
};

/// Throws std::invalid_argument when some entry is not a signed unit or e0 is
/// not a two-sided identity.
void require_well_formed(const MultTable& t);

/// Checks anticommutativity and unit squares entrywise, then norm composition
/// and alternativity by symbolic expansion over 16 indeterminates.
ValidationReport validate_table(const MultTable& t);

/// Product of two elements whose coordinates are polynomials.
std::array<symbolic::Poly, 8> symbolic_product(const MultTable& t, const std::array<symbolic::Poly, 8>& x,
                                               const std::array<symbolic::Poly, 8>& y);

struct QuaternionReport {
    bool closed = false;
    bool associative = false;
    bool isomorphic_to_H = false;
    /// Units sent to i, j, k.
    std::array<int, 3> ijk{};
};

/// Throws std::invalid_argument unless the three units of `line` close under t.
QuaternionReport quaternion_subalgebra(const MultTable& t, const OrientedLine& line);

/// Same table with units renamed so that each keeps its vector:
/// unit u under `from` becomes the unit with vector from(u) under `to`.
MultTable recode(const MultTable& t, const UnitLabeling& from, const UnitLabeling& to);

/// The seven oriented lines of a table: (a, b, c) with ab = +c, rotated canonically.
std::vector<OrientedLine> oriented_lines_of(const MultTable& t);

/// phi[i] is the signed CD unit that e_i maps to.
using BasisMap = std::array<SignedUnit, 8>;

/// Signed basis bijection into the Cayley-Dickson octonions preserving all
/// products. Throws std::invalid_argument if validate_table fails.
std::optional<BasisMap> find_isomorphism(const MultTable& t);

struct SweepResult {
    int assignments = 0;
    int valid = 0;
    /// Bit l set means line l of the base list was reversed.
    std::vector<unsigned> valid_masks;
};

/// Reverses every subset of `base` lines and counts the tables that validate.
SweepResult sweep_orientations(const UnitLabeling& labeling, const std::vector<OrientedLine>& base);

/// DOT digraph of the labeled Fano plane, one arrow cycle per oriented line.
std::string fano_to_dot(const MultTable& t, const UnitLabeling& labeling);

} // namespace octaves::fano
