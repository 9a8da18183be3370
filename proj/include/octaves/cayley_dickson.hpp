#pragma once

// The Cayley-Dickson tower over exact rationals.
//
// Level l has dimension 2^l: reals (0), complexes (1), quaternions (2),
// octonions (3), sedenions (4). An element at level l + 1 is a pair (a, b)
// of level-l elements with basis e_{2^l + i} = (0, e_i), and
//
//     (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),
//     conj(a, b)   = (conj(a), -b).
//
// With this convention e1 e2 = e3 in the quaternions.

#include "octaves/numbers.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace octaves::cd {

inline constexpr int kMaxLevel = 4;

class CDElement {
public:
    /// Zero element of the given level.
    explicit CDElement(int level);
    CDElement(int level, std::vector<Rational> coeffs);

    static CDElement unit(int level, int index);
    static CDElement real(int level, const Rational& value);
    /// Integer coefficient list; the length fixes the level and must be a power of two.
    static CDElement from_integers(std::span<const long> coeffs);

    int level() const { return level_; }
    int dimension() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    bool is_zero() const;
    /// True when every coefficient except that of e0 is zero.
    bool is_real() const;

    /// e.g. "1+e1-1/2e3"; "0" for zero.
    std::string to_string() const;

    friend CDElement operator+(const CDElement& a, const CDElement& b);
    friend CDElement operator-(const CDElement& a, const CDElement& b);
    friend CDElement operator-(const CDElement& a);
    friend CDElement operator*(const Rational& s, const CDElement& a);
    friend bool operator==(const CDElement&, const CDElement&) = default;

private:
    int level_;
    std::vector<Rational> coeffs_;
};

/// Product by the doubling rule. Throws std::invalid_argument on level mismatch.
CDElement cd_multiply(const CDElement& x, const CDElement& y);
inline CDElement operator*(const CDElement& x, const CDElement& y) { return cd_multiply(x, y); }

CDElement conjugate(const CDElement& x);

/// Sum of squared coefficients. Also computes x * conj(x) and throws
/// std::logic_error if that product is not the same real number.
Rational norm(const CDElement& x);

/// conj(x) / N(x). Throws std::invalid_argument for zero or level > 3.
CDElement inverse(const CDElement& x);

/// (xy)z - x(yz).
CDElement associator(const CDElement& x, const CDElement& y, const CDElement& z);

struct SignedUnit {
    int sign = 1;  ///< +1 or -1
    int index = 0; ///< basis unit e_index
    friend bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

/// e_i e_j for every pair of basis units at `level`, as signed units.
class BasisTable {
public:
    explicit BasisTable(int level);
    int level() const { return level_; }
    int dimension() const { return dim_; }
    SignedUnit operator()(int i, int j) const { return table_[static_cast<std::size_t>(i * dim_ + j)]; }

private:
    int level_;
    int dim_;
    std::vector<SignedUnit> table_;
};

enum class Law { commutative, associative, alternative, flexible, moufang, norm_composing };

std::string to_string(Law law);
/// Parses the names used by to_string; throws std::invalid_argument otherwise.
Law parse_law(const std::string& name);
inline constexpr std::array<Law, 6> kAllLaws{Law::commutative, Law::associative, Law::alternative,
                                             Law::flexible,    Law::moufang,     Law::norm_composing};

/// Number of elements a counterexample to `law` consists of.
int law_arity(Law law);

/// Evaluates `law` on concrete elements with exact arithmetic.
/// Elements are (x, y) for commutative and norm_composing, (x, y, z) otherwise.
bool law_holds_at(Law law, std::span<const CDElement> elements);

struct LawReport {
    Law law = Law::commutative;
    int level = 0;
    bool holds = true;
    /// Set exactly when holds is false; re-checkable with law_holds_at.
    std::optional<std::vector<CDElement>> counterexample;
    bool found_in_basis_pass = false;
    int random_trials = 0;
};

/// Checks `law` exhaustively on basis tuples (the decisive pass, using the
/// multilinear form of the law) and then on `trials` seeded random
/// rational elements. The first counterexample in lexicographic order is kept.
LawReport probe_law(int level, Law law, int trials, std::uint64_t seed);

/// Searches (e_i + s e_j)(e_k + t e_l) with i < j, k < l, s, t = +-1 in
/// lexicographic order for a zero product. None at levels 0..3.
std::optional<std::pair<CDElement, CDElement>> find_zero_divisors(int level);

/// Seeded random element with small rational coefficients.
CDElement random_element(int level, std::uint64_t& state);

} // namespace octaves::cd
