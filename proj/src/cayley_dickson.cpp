#include "octaves/cayley_dickson.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace octaves::cd {
namespace {

void require_level(int level) {
    if (level < 0 || level > kMaxLevel) {
        throw std::invalid_argument("Cayley-Dickson level must be in [0, " + std::to_string(kMaxLevel) +
                                    "], got " + std::to_string(level));
    }
}

using Coeffs = std::vector<Rational>;

Coeffs conj_coeffs(std::span<const Rational> a) {
    Coeffs out(a.begin(), a.end());
    for (std::size_t i = 1; i < out.size(); ++i) {
        out[i] = -out[i];
    }
    return out;
}

Coeffs multiply(std::span<const Rational> x, std::span<const Rational> y) {
    const std::size_t n = x.size();
    if (n == 1) {
        return {x[0] * y[0]};
    }
    const std::size_t h = n / 2;
    auto a = x.first(h);
    auto b = x.subspan(h);
    auto c = y.first(h);
    auto d = y.subspan(h);

    const Coeffs d_conj = conj_coeffs(d);
    const Coeffs c_conj = conj_coeffs(c);
    const Coeffs ac = multiply(a, c);
    const Coeffs db = multiply(d_conj, b);
    const Coeffs da = multiply(d, a);
    const Coeffs bc = multiply(b, c_conj);

    Coeffs out(n);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = ac[i] - db[i];
        out[h + i] = da[i] + bc[i];
    }
    return out;
}

// Integer vectors for the exhaustive basis passes.
using IntVec = std::vector<long>;

IntVec unit_vec(int dim, int i) {
    IntVec v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

IntVec table_mul(const BasisTable& t, const IntVec& x, const IntVec& y) {
    const int dim = t.dimension();
    IntVec out(static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < dim; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) {
            continue;
        }
        for (int j = 0; j < dim; ++j) {
            if (y[static_cast<std::size_t>(j)] == 0) {
                continue;
            }
            const SignedUnit p = t(i, j);
            out[static_cast<std::size_t>(p.index)] += p.sign * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

long int_norm(const IntVec& v) {
    long sum = 0;
    for (long c : v) {
        sum += c * c;
    }
    return sum;
}

bool all_zero(const IntVec& v) {
    for (long c : v) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

SignedUnit mul(const BasisTable& t, SignedUnit a, SignedUnit b) {
    const SignedUnit p = t(a.index, b.index);
    return {a.sign * b.sign * p.sign, p.index};
}

/// Accumulates signed units and reports whether they cancel.
class UnitSum {
public:
    void add(SignedUnit u, int weight = 1) { sums_[u.index] += u.sign * weight; }
    bool is_zero() const {
        for (const auto& [index, value] : sums_) {
            if (value != 0) {
                return false;
            }
        }
        return true;
    }

private:
    std::map<int, int> sums_;
};

CDElement element(int level, const IntVec& v) {
    std::vector<Rational> coeffs;
    coeffs.reserve(v.size());
    for (long c : v) {
        coeffs.emplace_back(c);
    }
    return CDElement(level, std::move(coeffs));
}

CDElement unit_sum(int level, int i, int j) {
    return CDElement::unit(level, i) + CDElement::unit(level, j);
}

/// First of e_i, e_j, e_i + e_j that violates `law` with the other arguments fixed.
/// `place` builds the argument list from the candidate.
template <typename Place>
std::vector<CDElement> polarization_witness(Law law, int level, int i, int j, Place place) {
    for (const CDElement& candidate : {CDElement::unit(level, i), CDElement::unit(level, j), unit_sum(level, i, j)}) {
        std::vector<CDElement> args = place(candidate);
        if (!law_holds_at(law, args)) {
            return args;
        }
    }
    throw std::logic_error("polarized law failed but no witness among e_i, e_j, e_i + e_j");
}

using Witness = std::optional<std::vector<CDElement>>;

Witness basis_pass_commutative(const BasisTable& t) {
    const int d = t.dimension();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (t(i, j) != t(j, i)) {
                return std::vector{CDElement::unit(t.level(), i), CDElement::unit(t.level(), j)};
            }
        }
    }
    return std::nullopt;
}

UnitSum associator_sum(const BasisTable& t, int i, int j, int k, UnitSum sum = {}) {
    const SignedUnit ei{1, i}, ej{1, j}, ek{1, k};
    sum.add(mul(t, mul(t, ei, ej), ek));
    sum.add(mul(t, ei, mul(t, ej, ek)), -1);
    return sum;
}

Witness basis_pass_associative(const BasisTable& t) {
    const int d = t.dimension();
    const int l = t.level();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                if (!associator_sum(t, i, j, k).is_zero()) {
                    return std::vector{CDElement::unit(l, i), CDElement::unit(l, j), CDElement::unit(l, k)};
                }
            }
        }
    }
    return std::nullopt;
}

Witness basis_pass_alternative(const BasisTable& t) {
    const int d = t.dimension();
    const int l = t.level();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                // [x,x,z] polarized in x, then [z,y,y] polarized in y.
                if (!associator_sum(t, j, i, k, associator_sum(t, i, j, k)).is_zero()) {
                    return polarization_witness(Law::alternative, l, i, j, [&](const CDElement& x) {
                        return std::vector{x, CDElement::unit(l, k)};
                    });
                }
                if (!associator_sum(t, k, j, i, associator_sum(t, k, i, j)).is_zero()) {
                    return polarization_witness(Law::alternative, l, i, j, [&](const CDElement& x) {
                        return std::vector{x, CDElement::unit(l, k)};
                    });
                }
            }
        }
    }
    return std::nullopt;
}

Witness basis_pass_flexible(const BasisTable& t) {
    const int d = t.dimension();
    const int l = t.level();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                if (!associator_sum(t, k, j, i, associator_sum(t, i, j, k)).is_zero()) {
                    return polarization_witness(Law::flexible, l, i, k, [&](const CDElement& x) {
                        return std::vector{x, CDElement::unit(l, j)};
                    });
                }
            }
        }
    }
    return std::nullopt;
}

// The four Moufang forms, each written as lhs - rhs with the two
// occurrences of z supplied separately so the form can be polarized.
//   z(x(zy)) = ((zx)z)y
//   x(z(yz)) = ((xz)y)z
//   (zx)(yz) = (z(xy))z
//   (zx)(yz) = z((xy)z)
void moufang_forms(const BasisTable& t, SignedUnit x, SignedUnit y, SignedUnit z1, SignedUnit z2,
                   std::array<UnitSum, 4>& sums) {
    auto m = [&](SignedUnit a, SignedUnit b) { return mul(t, a, b); };
    sums[0].add(m(z1, m(x, m(z2, y))));
    sums[0].add(m(m(m(z1, x), z2), y), -1);
    sums[1].add(m(x, m(z1, m(y, z2))));
    sums[1].add(m(m(m(x, z1), y), z2), -1);
    sums[2].add(m(m(z1, x), m(y, z2)));
    sums[2].add(m(m(z1, m(x, y)), z2), -1);
    sums[3].add(m(m(z1, x), m(y, z2)));
    sums[3].add(m(z1, m(m(x, y), z2)), -1);
}

Witness basis_pass_moufang(const BasisTable& t) {
    const int d = t.dimension();
    const int l = t.level();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int a = 0; a < d; ++a) {
                for (int b = a; b < d; ++b) {
                    std::array<UnitSum, 4> sums;
                    moufang_forms(t, {1, i}, {1, j}, {1, a}, {1, b}, sums);
                    moufang_forms(t, {1, i}, {1, j}, {1, b}, {1, a}, sums);
                    for (const UnitSum& s : sums) {
                        if (!s.is_zero()) {
                            return polarization_witness(Law::moufang, l, a, b, [&](const CDElement& z) {
                                return std::vector{CDElement::unit(l, i), CDElement::unit(l, j), z};
                            });
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

/// e_i, then e_i + e_j and e_i - e_j for j > i, in that order.
std::vector<IntVec> basis_pair_candidates(int dim) {
    std::vector<IntVec> out;
    for (int i = 0; i < dim; ++i) {
        out.push_back(unit_vec(dim, i));
        for (int j = i + 1; j < dim; ++j) {
            for (long s : {1L, -1L}) {
                IntVec v = unit_vec(dim, i);
                v[static_cast<std::size_t>(j)] = s;
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

Witness basis_pass_norm(const BasisTable& t) {
    const auto candidates = basis_pair_candidates(t.dimension());
    for (const IntVec& x : candidates) {
        for (const IntVec& y : candidates) {
            if (int_norm(table_mul(t, x, y)) != int_norm(x) * int_norm(y)) {
                return std::vector{element(t.level(), x), element(t.level(), y)};
            }
        }
    }
    return std::nullopt;
}

const BasisTable& cached_table(int level) {
    static const std::array<BasisTable, kMaxLevel + 1> tables{BasisTable(0), BasisTable(1), BasisTable(2),
                                                             BasisTable(3), BasisTable(4)};
    return tables[static_cast<std::size_t>(level)];
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

CDElement::CDElement(int level) : level_(level) {
    require_level(level);
    coeffs_.assign(std::size_t{1} << level, Rational(0));
}

CDElement::CDElement(int level, std::vector<Rational> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
    require_level(level);
    if (coeffs_.size() != (std::size_t{1} << level)) {
        throw std::invalid_argument("level " + std::to_string(level) + " needs " +
                                    std::to_string(1 << level) + " coefficients, got " +
                                    std::to_string(coeffs_.size()));
    }
}

CDElement CDElement::unit(int level, int index) {
    CDElement e(level);
    if (index < 0 || index >= e.dimension()) {
        throw std::invalid_argument("basis index " + std::to_string(index) + " out of range");
    }
    e.coeffs_[static_cast<std::size_t>(index)] = 1;
    return e;
}

CDElement CDElement::real(int level, const Rational& value) {
    CDElement e(level);
    e.coeffs_[0] = value;
    return e;
}

CDElement CDElement::from_integers(std::span<const long> coeffs) {
    int level = 0;
    while ((std::size_t{1} << level) < coeffs.size()) {
        ++level;
    }
    std::vector<Rational> values;
    for (long c : coeffs) {
        values.emplace_back(c);
    }
    return CDElement(level, std::move(values));
}

bool CDElement::is_zero() const {
    for (const Rational& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool CDElement::is_real() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

std::string CDElement::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (negative) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        if (i == 0) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1) {
            out += magnitude.get_den() == 1 ? magnitude.get_str() : "(" + magnitude.get_str() + ")";
        }
        out += "e" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

CDElement operator+(const CDElement& a, const CDElement& b) {
    if (a.level_ != b.level_) {
        throw std::invalid_argument("level mismatch");
    }
    CDElement out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        out.coeffs_[i] += b.coeffs_[i];
    }
    return out;
}

CDElement operator-(const CDElement& a, const CDElement& b) { return a + (-b); }

CDElement operator-(const CDElement& a) {
    CDElement out = a;
    for (Rational& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

CDElement operator*(const Rational& s, const CDElement& a) {
    CDElement out = a;
    for (Rational& c : out.coeffs_) {
        c *= s;
    }
    return out;
}

CDElement cd_multiply(const CDElement& x, const CDElement& y) {
    if (x.level() != y.level()) {
        throw std::invalid_argument("cannot multiply elements of levels " + std::to_string(x.level()) + " and " +
                                    std::to_string(y.level()));
    }
    return CDElement(x.level(), multiply(x.coeffs(), y.coeffs()));
}

CDElement conjugate(const CDElement& x) { return CDElement(x.level(), conj_coeffs(x.coeffs())); }

Rational norm(const CDElement& x) {
    Rational sum = 0;
    for (const Rational& c : x.coeffs()) {
        sum += c * c;
    }
    const CDElement self = x * conjugate(x);
    if (!self.is_real() || self[0] != sum) {
        throw std::logic_error("x * conj(x) is not the real number N(x) for x = " + x.to_string());
    }
    return sum;
}

CDElement inverse(const CDElement& x) {
    if (x.level() > 3) {
        throw std::invalid_argument("inverse is only total up to level 3; level " + std::to_string(x.level()) +
                                    " has zero divisors");
    }
    if (x.is_zero()) {
        throw std::invalid_argument("zero has no inverse");
    }
    const Rational n = norm(x);
    return Rational(1 / n) * conjugate(x);
}

CDElement associator(const CDElement& x, const CDElement& y, const CDElement& z) {
    return (x * y) * z - x * (y * z);
}

BasisTable::BasisTable(int level) : level_(level), dim_(1 << level) {
    require_level(level);
    table_.reserve(static_cast<std::size_t>(dim_ * dim_));
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            const CDElement p = CDElement::unit(level, i) * CDElement::unit(level, j);
            std::optional<SignedUnit> unit;
            for (int k = 0; k < dim_; ++k) {
                if (p[k] == 0) {
                    continue;
                }
                if (unit || (p[k] != 1 && p[k] != -1)) {
                    throw std::logic_error("basis product is not a signed unit");
                }
                unit = SignedUnit{p[k] > 0 ? 1 : -1, k};
            }
            if (!unit) {
                throw std::logic_error("basis product is zero");
            }
            table_.push_back(*unit);
        }
    }
}

std::string to_string(Law law) {
    switch (law) {
    case Law::commutative: return "commutative";
    case Law::associative: return "associative";
    case Law::alternative: return "alternative";
    case Law::flexible: return "flexible";
    case Law::moufang: return "moufang";
    case Law::norm_composing: return "norm_composing";
    }
    throw std::invalid_argument("unknown law");
}

Law parse_law(const std::string& name) {
    for (Law law : kAllLaws) {
        if (to_string(law) == name) {
            return law;
        }
    }
    if (name == "norm-composing") {
        return Law::norm_composing;
    }
    throw std::invalid_argument("unknown law '" + name + "'");
}

int law_arity(Law law) {
    switch (law) {
    case Law::commutative:
    case Law::alternative:
    case Law::flexible:
    case Law::norm_composing: return 2;
    case Law::associative:
    case Law::moufang: return 3;
    }
    throw std::invalid_argument("unknown law");
}

bool law_holds_at(Law law, std::span<const CDElement> e) {
    if (static_cast<int>(e.size()) != law_arity(law)) {
        throw std::invalid_argument(to_string(law) + " takes " + std::to_string(law_arity(law)) + " elements");
    }
    switch (law) {
    case Law::commutative: return e[0] * e[1] == e[1] * e[0];
    case Law::associative: return associator(e[0], e[1], e[2]).is_zero();
    case Law::alternative:
        return associator(e[0], e[0], e[1]).is_zero() && associator(e[1], e[0], e[0]).is_zero();
    case Law::flexible: return associator(e[0], e[1], e[0]).is_zero();
    case Law::moufang: {
        const CDElement& x = e[0];
        const CDElement& y = e[1];
        const CDElement& z = e[2];
        return z * (x * (z * y)) == ((z * x) * z) * y && x * (z * (y * z)) == ((x * z) * y) * z &&
               (z * x) * (y * z) == (z * (x * y)) * z && (z * x) * (y * z) == z * ((x * y) * z);
    }
    case Law::norm_composing: return norm(e[0] * e[1]) == norm(e[0]) * norm(e[1]);
    }
    throw std::invalid_argument("unknown law");
}

CDElement random_element(int level, std::uint64_t& state) {
    CDElement x(level);
    std::vector<Rational> coeffs;
    for (int i = 0; i < x.dimension(); ++i) {
        const long num = static_cast<long>(splitmix64(state) % 19) - 9;
        const long den = static_cast<long>(splitmix64(state) % 4) + 1;
        coeffs.push_back(make_rational(num, den));
    }
    return CDElement(level, std::move(coeffs));
}

LawReport probe_law(int level, Law law, int trials, std::uint64_t seed) {
    require_level(level);
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    const BasisTable& t = cached_table(level);
    LawReport report;
    report.law = law;
    report.level = level;
    report.random_trials = trials;

    Witness witness;
    switch (law) {
    case Law::commutative: witness = basis_pass_commutative(t); break;
    case Law::associative: witness = basis_pass_associative(t); break;
    case Law::alternative: witness = basis_pass_alternative(t); break;
    case Law::flexible: witness = basis_pass_flexible(t); break;
    case Law::moufang: witness = basis_pass_moufang(t); break;
    case Law::norm_composing: witness = basis_pass_norm(t); break;
    }
    if (witness) {
        report.holds = false;
        report.counterexample = std::move(witness);
        report.found_in_basis_pass = true;
    }

    std::uint64_t state = seed;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<CDElement> args;
        for (int a = 0; a < law_arity(law); ++a) {
            args.push_back(random_element(level, state));
        }
        if (!law_holds_at(law, args) && !report.counterexample) {
            report.holds = false;
            report.counterexample = std::move(args);
        }
    }
    return report;
}

std::optional<std::pair<CDElement, CDElement>> find_zero_divisors(int level) {
    require_level(level);
    const BasisTable& t = cached_table(level);
    const int dim = t.dimension();
    std::vector<IntVec> candidates;
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            for (long s : {1L, -1L}) {
                IntVec v = unit_vec(dim, i);
                v[static_cast<std::size_t>(j)] = s;
                candidates.push_back(std::move(v));
            }
        }
    }
    for (const IntVec& x : candidates) {
        for (const IntVec& y : candidates) {
            if (all_zero(table_mul(t, x, y))) {
                return std::pair{element(level, x), element(level, y)};
            }
        }
    }
    return std::nullopt;
}

} // namespace octaves::cd
