#include "doctest.h"

#include "octaves/fano_octonions.hpp"

#include <set>
#include <stdexcept>

using namespace octaves;
using namespace octaves::fano;

namespace {

MultTable standard_table() { return table_from_oriented_lines(standard_labeling(), standard_rules()); }

SignedUnit su(int sign, int index) { return SignedUnit{sign, index}; }

// Image of t(i, j) under phi must equal phi(i) phi(j) in the CD table.
bool preserves_products(const MultTable& t, const BasisMap& phi) {
    const MultTable cd = cd_octonion_table();
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const SignedUnit lhs_raw = cd(phi[i].index, phi[j].index);
            const int lhs_sign = lhs_raw.sign * phi[i].sign * phi[j].sign;
            const SignedUnit prod = t(i, j);
            const SignedUnit rhs = phi[prod.index];
            if (lhs_raw.index != rhs.index || lhs_sign != prod.sign * rhs.sign) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("standard rules produce the stated products") {
    const MultTable t = standard_table();
    CHECK(t(1, 3) == su(1, 2));
    CHECK(t(2, 6) == su(1, 4));
    CHECK(t(4, 5) == su(1, 1));
    CHECK(t(3, 6) == su(1, 5));
    CHECK(t(1, 7) == su(1, 6));
    CHECK(t(2, 7) == su(1, 5));
    CHECK(t(4, 7) == su(1, 3));
    // Derived by the cycle rule.
    CHECK(t(1, 2) == su(-1, 3));
    CHECK(t(3, 2) == su(1, 1));
    CHECK(t(2, 2) == su(-1, 0));
    for (int i = 0; i < 8; ++i) {
        CHECK(t(0, i) == su(1, i));
        CHECK(t(i, 0) == su(1, i));
    }
}

TEST_CASE("lines are exactly the XOR-zero triples") {
    const UnitLabeling lab = standard_labeling();
    for (const OrientedLine& line : standard_rules()) {
        CHECK(line.collinear_under(lab));
        const auto u = line.units();
        CHECK((lab.vector_of(u[0]) ^ lab.vector_of(u[1]) ^ lab.vector_of(u[2])) == 0);
    }
    CHECK_FALSE(OrientedLine(1, 2, 4).collinear_under(lab));
    const MultTable t = standard_table();
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            if (i != j) {
                CHECK(lab.vector_of(t(i, j).index) == (lab.vector_of(i) ^ lab.vector_of(j)));
            }
        }
    }
}

TEST_CASE("oriented line helpers") {
    const OrientedLine l(3, 1, 2);
    CHECK(l.cycle() == std::array{1, 2, 3});
    CHECK(l.orientation(1, 2) == 1);
    CHECK(l.orientation(2, 1) == -1);
    CHECK(l.orientation(3, 1) == 1);
    CHECK(l.orientation(1, 4) == 0);
    CHECK(l.reversed() == OrientedLine(1, 3, 2));
    CHECK_THROWS_AS(OrientedLine(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(OrientedLine(0, 1, 2), std::invalid_argument);
}

TEST_CASE("table construction rejects bad line sets") {
    auto rules = standard_rules();
    rules[0] = OrientedLine(1, 2, 4);
    CHECK_THROWS_AS(table_from_oriented_lines(standard_labeling(), rules), std::invalid_argument);
    rules = standard_rules();
    rules.pop_back();
    CHECK_THROWS_AS(table_from_oriented_lines(standard_labeling(), rules), std::invalid_argument);
    rules = standard_rules();
    rules[1] = rules[0].reversed();
    CHECK_THROWS_AS(table_from_oriented_lines(standard_labeling(), rules), std::invalid_argument);
    CHECK_THROWS_AS(UnitLabeling({1, 2, 3, 4, 5, 6, 6}), std::invalid_argument);
    CHECK_THROWS_AS(UnitLabeling({0, 2, 3, 4, 5, 6, 7}), std::invalid_argument);
}

TEST_CASE("the standard table validates") {
    const ValidationReport r = validate_table(standard_table());
    CHECK(r.anticommutative);
    CHECK(r.units_square_to_minus_one);
    CHECK(r.norm_composing);
    CHECK(r.alternative);
    CHECK(r.all());
    CHECK(r.failures.empty());
    CHECK(r.norm_residual_terms == 0);
    CHECK(r.alternative_residual_terms == 0);
}

TEST_CASE("reversing one line breaks the algebra") {
    auto rules = standard_rules();
    rules[0] = rules[0].reversed();
    const ValidationReport r = validate_table(table_from_oriented_lines(standard_labeling(), rules));
    CHECK(r.anticommutative);
    CHECK(r.units_square_to_minus_one);
    CHECK_FALSE(r.all());
    CHECK_FALSE(r.failures.empty());
    CHECK((r.norm_residual_terms > 0 || r.alternative_residual_terms > 0));
}

TEST_CASE("injected defects are reported with witnesses") {
    MultTable t = standard_table();
    t.set(2, 1, t(1, 2));
    ValidationReport r = validate_table(t);
    CHECK_FALSE(r.anticommutative);
    CHECK_FALSE(r.all());
    bool found = false;
    for (const Witness& w : r.failures) {
        if (w.property == Property::anticommutative) {
            found = true;
            REQUIRE(w.elements.size() == 2);
            const std::array<long, 8> e1{0, 1, 0, 0, 0, 0, 0, 0};
            const std::array<long, 8> e2{0, 0, 1, 0, 0, 0, 0, 0};
            CHECK(w.elements[0] == e1);
            CHECK(w.elements[1] == e2);
            CHECK(t.multiply(e1, e2) == t.multiply(e2, e1));
        }
    }
    CHECK(found);

    MultTable sq = standard_table();
    sq.set(5, 5, su(1, 0));
    r = validate_table(sq);
    CHECK_FALSE(r.units_square_to_minus_one);

    MultTable broken = standard_table();
    broken.set(0, 3, su(1, 4));
    CHECK_THROWS_AS(require_well_formed(broken), std::invalid_argument);
    CHECK_THROWS_AS(validate_table(broken), std::invalid_argument);
}

TEST_CASE("symbolic product agrees with the integer product") {
    const MultTable t = standard_table();
    std::array<symbolic::Poly, 8> x, y;
    const std::array<long, 8> xv{1, -2, 3, 0, 5, -1, 2, 7};
    const std::array<long, 8> yv{0, 4, -1, 2, 2, 3, -3, 1};
    for (int i = 0; i < 8; ++i) {
        x[i] = symbolic::Poly(Integer(xv[i]));
        y[i] = symbolic::Poly(Integer(yv[i]));
    }
    const auto z = symbolic_product(t, x, y);
    const auto expected = t.multiply(xv, yv);
    for (int i = 0; i < 8; ++i) {
        CHECK(z[i] == symbolic::Poly(Integer(expected[i])));
    }
}

TEST_CASE("quaternion subalgebras on lines") {
    const MultTable t = standard_table();
    for (const OrientedLine& line : standard_rules()) {
        const QuaternionReport q = quaternion_subalgebra(t, line);
        CHECK(q.closed);
        CHECK(q.associative);
        CHECK(q.isomorphic_to_H);
        const auto [i, j, k] = q.ijk;
        CHECK(t(i, j) == su(1, k));
        CHECK(t(j, k) == su(1, i));
        CHECK(t(k, i) == su(1, j));
    }
    const QuaternionReport l1 = quaternion_subalgebra(t, OrientedLine(1, 3, 2));
    CHECK(l1.ijk == std::array{2, 1, 3});
    CHECK(quaternion_subalgebra(t, OrientedLine(4, 7, 3)).isomorphic_to_H);
    CHECK_THROWS_AS(quaternion_subalgebra(t, OrientedLine(1, 2, 4)), std::invalid_argument);
}

TEST_CASE("labelings and recoding") {
    const UnitLabeling standard = standard_labeling();
    CHECK(standard.vector_string(1) == "010");
    CHECK(standard.vector_string(7) == "111");
    CHECK(standard.unit_of(0b110) == 3);
    CHECK(points_labeling() == standard);
    const MultTable t = standard_table();
    CHECK(recode(t, standard, standard) == t);
    CHECK(recode(t, standard, points_labeling()) == t);

    const UnitLabeling points = point_order_labeling();
    CHECK(points.vector_string(1) == "100");
    CHECK(points.vector_string(7) == "101");
    const MultTable moved = recode(t, standard, points);
    CHECK(moved != t);
    CHECK(validate_table(moved).all());
    CHECK(recode(moved, points, standard) == t);
    // The unit with vector v keeps the same role under both names.
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            const SignedUnit before = t(i, j);
            const SignedUnit after = moved(points.unit_of(standard.vector_of(i)), points.unit_of(standard.vector_of(j)));
            CHECK(after.sign == before.sign);
            if (before.index == 0) {
                CHECK(after.index == 0);
            } else {
                CHECK(points.vector_of(after.index) == standard.vector_of(before.index));
            }
        }
    }
}

TEST_CASE("oriented lines reconstruct the table") {
    const MultTable t = standard_table();
    const auto lines = oriented_lines_of(t);
    CHECK(lines.size() == 7);
    CHECK(table_from_oriented_lines(standard_labeling(), lines) == t);
    std::set<std::array<int, 3>> a, b;
    for (const auto& l : lines) a.insert(l.cycle());
    for (const auto& l : standard_rules()) b.insert(l.cycle());
    CHECK(a == b);
}

TEST_CASE("the Cayley-Dickson table validates and is its own image") {
    const MultTable cd = cd_octonion_table();
    CHECK(cd(1, 2) == su(1, 3));
    CHECK(validate_table(cd).all());
    const auto phi = find_isomorphism(cd);
    REQUIRE(phi.has_value());
    for (int i = 0; i < 8; ++i) {
        CHECK((*phi)[i] == su(1, i));
    }
}

TEST_CASE("the Fano table is isomorphic to the Cayley-Dickson table") {
    const MultTable t = standard_table();
    const auto phi = find_isomorphism(t);
    REQUIRE(phi.has_value());
    CHECK((*phi)[0] == su(1, 0));
    std::set<int> images;
    for (const SignedUnit& u : *phi) images.insert(u.index);
    CHECK(images.size() == 8);
    CHECK(preserves_products(t, *phi));

    MultTable bad = t;
    bad.set(2, 1, t(1, 2));
    CHECK_THROWS_AS(find_isomorphism(bad), std::invalid_argument);
}

TEST_CASE("orientation sweep") {
    const SweepResult r = sweep_orientations(standard_labeling(), standard_rules());
    CHECK(r.assignments == 128);
    CHECK(r.valid == 16);
    CHECK(r.valid_masks.size() == 16);
    CHECK(r.valid_masks.front() == 0);
    for (unsigned mask : r.valid_masks) {
        auto rules = standard_rules();
        for (std::size_t l = 0; l < rules.size(); ++l) {
            if (mask & (1u << l)) rules[l] = rules[l].reversed();
        }
        CHECK(validate_table(table_from_oriented_lines(standard_labeling(), rules)).all());
    }
}

TEST_CASE("entry encoding") {
    CHECK(encode_entry(su(1, 0)) == 0);
    CHECK(encode_entry(su(-1, 0)) == -8);
    CHECK(encode_entry(su(-1, 3)) == -3);
    for (int code = -8; code <= 7; ++code) {
        CHECK(encode_entry(decode_entry(code)) == code);
    }
    CHECK_THROWS_AS(decode_entry(8), std::invalid_argument);
    CHECK_THROWS_AS(decode_entry(-9), std::invalid_argument);
}

TEST_CASE("renderings") {
    const MultTable t = standard_table();
    const std::string grid = t.to_string();
    CHECK(grid.find("-e3") != std::string::npos);
    const std::string dot = fano_to_dot(t, standard_labeling());
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("010") != std::string::npos);
}
