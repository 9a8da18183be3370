#include "doctest.h"

#include "octaves/identities.hpp"

#include "json.hpp"

#include <random>
#include <stdexcept>

using namespace octaves;
using namespace octaves::identities;
using symbolic::Poly;

namespace {

Poly a(int i) { return Poly::variable(a_var(i)); }
Poly b(int j) { return Poly::variable(b_var(j)); }

std::vector<Integer> random_values(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> dist(-50, 50);
    std::vector<Integer> v(32, Integer(0));
    for (int i = 1; i <= n; ++i) {
        v[a_var(i)] = dist(rng);
        v[b_var(i)] = dist(rng);
    }
    return v;
}

} // namespace

TEST_CASE("two-square forms") {
    const NSquareIdentity id = derive_identity(2);
    REQUIRE(id.forms.size() == 2);
    // (ac - bd, bc + ad) with a = a1, b = a2, c = b1, d = b2
    CHECK(id.forms[0] == a(1) * b(1) - a(2) * b(2));
    CHECK(id.forms[1] == a(2) * b(1) + a(1) * b(2));
    CHECK(verify_identity(id));
    CHECK(is_bilinear(id));
    CHECK(emit_identity(id, Format::text) == "(a1^2+a2^2)(b1^2+b2^2) = (a1b1-a2b2)^2 + (a2b1+a1b2)^2");
}

TEST_CASE("one-square identity") {
    const NSquareIdentity id = derive_identity(1);
    REQUIRE(id.forms.size() == 1);
    CHECK(id.forms[0] == a(1) * b(1));
    CHECK(verify_identity(id));
    CHECK(emit_identity(id, Format::text) == "(a1^2)(b1^2) = (a1b1)^2");
}

TEST_CASE("four- and eight-square identities verify") {
    for (int n : {4, 8}) {
        const NSquareIdentity id = derive_identity(n);
        REQUIRE(id.forms.size() == static_cast<std::size_t>(n));
        CHECK(verify_identity(id));
        CHECK(id.residual.is_zero());
        CHECK(is_bilinear(id));
        for (const Poly& z : id.forms) {
            CHECK(z.size() == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("numeric shadow on random integers") {
    std::mt19937_64 rng(8);
    for (int n : {1, 2, 4, 8}) {
        const NSquareIdentity id = derive_identity(n);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto v = random_values(rng, n);
            Integer sa = 0, sb = 0, sz = 0;
            for (int i = 1; i <= n; ++i) {
                sa += v[a_var(i)] * v[a_var(i)];
                sb += v[b_var(i)] * v[b_var(i)];
            }
            for (const Poly& z : id.forms) {
                const Integer value = z.evaluate(v);
                sz += value * value;
            }
            CHECK(sa * sb == sz);
        }
    }
}

TEST_CASE("residual evaluates to zero under random substitution") {
    const NSquareIdentity id = derive_identity(4);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Integer> v(32, Integer(0));
        for (auto& x : v) x = dist(rng);
        CHECK(id.residual.evaluate(v) == 0);
    }
}

TEST_CASE("sixteen squares fail") {
    const NSquareIdentity id = derive_identity(16);
    CHECK_FALSE(verify_identity(id));
    CHECK_FALSE(id.residual.is_zero());
    CHECK(is_bilinear(id));
    CHECK_THROWS_AS(emit_identity(id, Format::text), std::invalid_argument);
    CHECK_THROWS_AS(emit_identity(id, Format::json), std::invalid_argument);
}

TEST_CASE("identity derived from the Fano table") {
    const fano::MultTable t = fano::table_from_oriented_lines(fano::standard_labeling(), fano::standard_rules());
    const NSquareIdentity id = derive_identity(t);
    CHECK(id.n == 8);
    CHECK(verify_identity(id));
    CHECK(is_bilinear(id));

    // Under the signed basis map phi, z_k of the Fano table equals
    // s_k times the CD form at index |phi(k)| with inputs moved the same way.
    const NSquareIdentity cd = derive_identity(8);
    const auto phi = fano::find_isomorphism(t);
    REQUIRE(phi.has_value());
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto v = random_values(rng, 8);
        std::vector<Integer> w(32, Integer(0));
        for (int i = 0; i < 8; ++i) {
            const auto& img = (*phi)[static_cast<std::size_t>(i)];
            w[a_var(img.index + 1)] = img.sign * v[a_var(i + 1)];
            w[b_var(img.index + 1)] = img.sign * v[b_var(i + 1)];
        }
        for (int k = 0; k < 8; ++k) {
            const auto& img = (*phi)[static_cast<std::size_t>(k)];
            CHECK(img.sign * id.forms[static_cast<std::size_t>(k)].evaluate(v) ==
                  cd.forms[static_cast<std::size_t>(img.index)].evaluate(w));
        }
    }
    for (const Poly& z : id.forms) CHECK(z.size() == 8);

    fano::MultTable bad = t;
    bad.set(2, 1, t(1, 2));
    CHECK_THROWS_AS(derive_identity(bad), std::invalid_argument);
}

TEST_CASE("json emission") {
    const NSquareIdentity id = derive_identity(8);
    const auto doc = nlohmann::json::parse(emit_identity(id, Format::json));
    CHECK(doc["n"] == 8);
    CHECK(doc["verified"] == true);
    REQUIRE(doc["forms"].size() == 8);
    for (const auto& z : doc["forms"]) {
        CHECK(z.size() == 8);
        for (const auto& term : z) {
            CHECK((term["sign"] == 1 || term["sign"] == -1));
            CHECK(term["a"].get<int>() >= 1);
            CHECK(term["b"].get<int>() <= 8);
        }
    }
    const auto two = nlohmann::json::parse(emit_identity(derive_identity(2), Format::json));
    CHECK(two["forms"][0][0] == nlohmann::json{{"sign", 1}, {"a", 1}, {"b", 1}});
}

TEST_CASE("invalid sizes") {
    for (int n : {0, 3, 5, 32}) {
        CHECK_THROWS_AS(derive_identity(n), std::invalid_argument);
    }
    CHECK_THROWS_AS(a_var(0), std::invalid_argument);
    CHECK_THROWS_AS(b_var(17), std::invalid_argument);
}
