#pragma once

// Sparse multivariate polynomials with exact integer coefficients.
//
// A Poly is a map from canonical monomials to nonzero coefficients, so two
// polynomials are equal exactly when their term maps are equal, and the
// zero polynomial is the empty map. Terms iterate in graded reverse
// lexicographic order (higher total degree first; within a degree, the
// monomial with the smaller exponent on the highest-numbered differing
// variable first). Printing and hashing use that order.

#include "octaves/numbers.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace octaves::symbolic {

using VarId = std::uint16_t;

struct Factor {
    VarId var;
    std::uint16_t exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Product of variables with positive exponents, variables ascending.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(VarId var, std::uint16_t exponent = 1);

    std::span<const Factor> factors() const { return factors_; }
    unsigned degree() const { return degree_; }
    unsigned exponent(VarId var) const;
    bool is_constant() const { return factors_.empty(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
    unsigned degree_ = 0;
};

/// Strict order used for term iteration: true when `a` prints before `b`.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Human names for variable ids, used only for rendering.
class VariableNames {
public:
    VariableNames() = default;
    explicit VariableNames(std::vector<std::string> names) : names_(std::move(names)) {}

    void set(VarId var, std::string name);
    /// Registered name, or "x<id>" when none was given.
    std::string name(VarId var) const;

private:
    std::vector<std::string> names_;
};

class Poly {
public:
    using Terms = std::map<Monomial, Integer, TermOrder>;

    Poly() = default;
    explicit Poly(const Integer& constant);

    static Poly variable(VarId var);
    static Poly term(const Integer& coefficient, const Monomial& monomial);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Largest total degree among the terms; 0 for the zero polynomial.
    unsigned degree() const;
    /// Coefficient of `monomial`, zero when absent.
    Integer coefficient(const Monomial& monomial) const;

    /// Evaluates with values[id] substituted for each variable id.
    /// Throws std::out_of_range when a variable has no value.
    Integer evaluate(std::span<const Integer> values) const;

    std::string to_string(const VariableNames& names = {}) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Integer& scalar);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Integer& s) { return a *= s; }
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Adds coefficient * monomial in place, dropping the term if it cancels.
    void add_term(const Integer& coefficient, const Monomial& monomial);

private:
    Terms terms_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
bool is_zero(const Poly& a);

/// Renders a single monomial as concatenated names with ^ exponents, e.g. "a1^2b3".
std::string monomial_to_string(const Monomial& monomial, const VariableNames& names);

} // namespace octaves::symbolic
