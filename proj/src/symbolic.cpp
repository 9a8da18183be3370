#include "octaves/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace octaves::symbolic {

Monomial Monomial::variable(VarId var, std::uint16_t exponent) {
    Monomial m;
    if (exponent > 0) {
        m.factors_.push_back({var, exponent});
        m.degree_ = exponent;
    }
    return m;
}

unsigned Monomial::exponent(VarId var) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                               [](const Factor& f, VarId v) { return f.var < v; });
    return (it != factors_.end() && it->var == var) ? it->exponent : 0U;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->var < ib->var)) {
            out.factors_.push_back(*ia++);
        } else if (ia == a.factors_.end() || ib->var < ia->var) {
            out.factors_.push_back(*ib++);
        } else {
            out.factors_.push_back({ia->var, static_cast<std::uint16_t>(ia->exponent + ib->exponent)});
            ++ia;
            ++ib;
        }
    }
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) {
        return a.degree() > b.degree();
    }
    // Walk both factor lists from the highest variable down; at the first
    // difference the smaller exponent on the higher variable comes first.
    auto fa = a.factors();
    auto fb = b.factors();
    auto ia = fa.rbegin();
    auto ib = fb.rbegin();
    while (ia != fa.rend() && ib != fb.rend()) {
        if (ia->var != ib->var) {
            // The monomial holding the higher variable has a positive exponent
            // there while the other has zero.
            return ia->var < ib->var;
        }
        if (ia->exponent != ib->exponent) {
            return ia->exponent < ib->exponent;
        }
        ++ia;
        ++ib;
    }
    // Equal degree and one list is a suffix of the other: only possible when equal.
    return false;
}

void VariableNames::set(VarId var, std::string name) {
    if (names_.size() <= var) {
        names_.resize(static_cast<std::size_t>(var) + 1);
    }
    names_[var] = std::move(name);
}

std::string VariableNames::name(VarId var) const {
    if (var < names_.size() && !names_[var].empty()) {
        return names_[var];
    }
    return "x" + std::to_string(var);
}

Poly::Poly(const Integer& constant) {
    if (constant != 0) {
        terms_.emplace(Monomial{}, constant);
    }
}

Poly Poly::variable(VarId var) { return term(1, Monomial::variable(var)); }

Poly Poly::term(const Integer& coefficient, const Monomial& monomial) {
    Poly p;
    p.add_term(coefficient, monomial);
    return p;
}

unsigned Poly::degree() const {
    // Graded order puts the highest degree first.
    return terms_.empty() ? 0U : terms_.begin()->first.degree();
}

Integer Poly::coefficient(const Monomial& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Poly::add_term(const Integer& coefficient, const Monomial& monomial) {
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Integer Poly::evaluate(std::span<const Integer> values) const {
    Integer total = 0;
    for (const auto& [monomial, coefficient] : terms_) {
        Integer value = coefficient;
        for (const Factor& f : monomial.factors()) {
            if (f.var >= values.size()) {
                throw std::out_of_range("no value for variable x" + std::to_string(f.var));
            }
            Integer power;
            mpz_pow_ui(power.get_mpz_t(), values[f.var].get_mpz_t(), f.exponent);
            value *= power;
        }
        total += value;
    }
    return total;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [monomial, coefficient] : out.terms_) {
        coefficient = -coefficient;
    }
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [monomial, coefficient] : other.terms_) {
        add_term(coefficient, monomial);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [monomial, coefficient] : other.terms_) {
        add_term(-coefficient, monomial);
    }
    return *this;
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [monomial, coefficient] : terms_) {
        coefficient *= scalar;
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ca * cb, ma * mb);
        }
    }
    return out;
}

std::string monomial_to_string(const Monomial& monomial, const VariableNames& names) {
    std::string out;
    for (const Factor& f : monomial.factors()) {
        out += names.name(f.var);
        if (f.exponent > 1) {
            out += "^" + std::to_string(f.exponent);
        }
    }
    return out;
}

std::string Poly::to_string(const VariableNames& names) const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [monomial, coefficient] : terms_) {
        const bool negative = coefficient < 0;
        if (negative) {
            out += "-";
        } else if (!first) {
            out += "+";
        }
        const Integer magnitude = abs(coefficient);
        if (monomial.is_constant()) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) {
                out += magnitude.get_str();
            }
            out += monomial_to_string(monomial, names);
        }
        first = false;
    }
    return out;
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

bool is_zero(const Poly& a) { return a.is_zero(); }

} // namespace octaves::symbolic
