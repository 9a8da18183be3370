#include "octaves/identities.hpp"

#include "json.hpp"

#include <stdexcept>

namespace octaves::identities {
namespace {

using symbolic::Poly;

constexpr int kMaxN = 16;

Poly sum_of_squares(const std::vector<Poly>& terms) {
    Poly sum;
    for (const Poly& t : terms) {
        sum += t * t;
    }
    return sum;
}

template <typename Table>
NSquareIdentity from_table(int n, const Table& product) {
    NSquareIdentity id;
    id.n = n;
    id.forms.assign(static_cast<std::size_t>(n), Poly{});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const cd::SignedUnit p = product(i, j);
            const Poly term = Poly::variable(a_var(i + 1)) * Poly::variable(b_var(j + 1));
            if (p.sign < 0) {
                id.forms[static_cast<std::size_t>(p.index)] -= term;
            } else {
                id.forms[static_cast<std::size_t>(p.index)] += term;
            }
        }
    }
    std::vector<Poly> as;
    std::vector<Poly> bs;
    for (int i = 1; i <= n; ++i) {
        as.push_back(Poly::variable(a_var(i)));
        bs.push_back(Poly::variable(b_var(i)));
    }
    id.residual = sum_of_squares(as) * sum_of_squares(bs) - sum_of_squares(id.forms);
    return id;
}

std::string sum_of_squares_text(char block, int n) {
    std::string out = "(";
    for (int i = 1; i <= n; ++i) {
        if (i > 1) {
            out += "+";
        }
        out += block + std::to_string(i) + "^2";
    }
    return out + ")";
}

} // namespace

static void require_index(int i) {
    if (i < 1 || i > kMaxN) {
        throw std::invalid_argument("variable index must be in 1.." + std::to_string(kMaxN));
    }
}

symbolic::VarId a_var(int i) {
    require_index(i);
    return static_cast<symbolic::VarId>(i - 1);
}

symbolic::VarId b_var(int j) {
    require_index(j);
    return static_cast<symbolic::VarId>(kMaxN + j - 1);
}

const symbolic::VariableNames& variable_names() {
    static const symbolic::VariableNames names = [] {
        symbolic::VariableNames v;
        for (int i = 1; i <= kMaxN; ++i) {
            v.set(a_var(i), "a" + std::to_string(i));
            v.set(b_var(i), "b" + std::to_string(i));
        }
        return v;
    }();
    return names;
}

NSquareIdentity derive_identity(int n) {
    int level = 0;
    while ((1 << level) < n) {
        ++level;
    }
    if (n < 1 || (1 << level) != n || n > kMaxN) {
        throw std::invalid_argument("n must be one of 1, 2, 4, 8, 16; got " + std::to_string(n));
    }
    return from_table(n, cd::BasisTable(level));
}

NSquareIdentity derive_identity(const fano::MultTable& table) {
    if (!fano::validate_table(table).all()) {
        throw std::invalid_argument("source table does not validate as an octonion algebra");
    }
    return from_table(8, table);
}

bool verify_identity(const NSquareIdentity& id) { return id.residual.is_zero(); }

bool is_bilinear(const NSquareIdentity& id) {
    for (const Poly& form : id.forms) {
        for (const auto& [monomial, coefficient] : form.terms()) {
            unsigned a_degree = 0;
            unsigned b_degree = 0;
            for (const symbolic::Factor& f : monomial.factors()) {
                (f.var < kMaxN ? a_degree : b_degree) += f.exponent;
            }
            if (a_degree != 1 || b_degree != 1) {
                return false;
            }
        }
    }
    return true;
}

std::string emit_identity(const NSquareIdentity& id, Format format) {
    if (!verify_identity(id)) {
        throw std::invalid_argument("the " + std::to_string(id.n) + "-square residual is not zero (" +
                                    std::to_string(id.residual.size()) + " terms)");
    }
    std::string text = sum_of_squares_text('a', id.n) + sum_of_squares_text('b', id.n) + " =";
    for (std::size_t k = 0; k < id.forms.size(); ++k) {
        text += (k == 0 ? " (" : " + (") + id.forms[k].to_string(variable_names()) + ")^2";
    }
    if (format == Format::text) {
        return text;
    }

    nlohmann::ordered_json forms = nlohmann::ordered_json::array();
    for (const Poly& form : id.forms) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [monomial, coefficient] : form.terms()) {
            int a = 0;
            int b = 0;
            for (const symbolic::Factor& f : monomial.factors()) {
                if (f.var < kMaxN) {
                    a = f.var + 1;
                } else {
                    b = f.var - kMaxN + 1;
                }
            }
            terms.push_back({{"sign", coefficient > 0 ? 1 : -1}, {"a", a}, {"b", b}});
        }
        forms.push_back(std::move(terms));
    }
    nlohmann::ordered_json doc;
    doc["n"] = id.n;
    doc["verified"] = true;
    doc["forms"] = std::move(forms);
    doc["text"] = text;
    return doc.dump(2);
}

} // namespace octaves::identities
