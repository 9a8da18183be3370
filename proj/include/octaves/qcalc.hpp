#pragma once

// q-analogues over the integers: q-integers, q-factorials, Gaussian
// binomials, Galois numbers and truncated formal power series.
//
// Every function here takes q >= 1 and throws std::invalid_argument
// otherwise. Results are exact.

#include "octaves/numbers.hpp"

#include <optional>
#include <span>
#include <vector>

namespace octaves::qcalc {

/// n_q = 1 + q + ... + q^(n-1); 0_q = 0.
Integer q_integer(int n, int q);

/// (n_q)! = 1_q * 2_q * ... * n_q; (0_q)! = 1.
Integer q_factorial(int n, int q);

/// Number of k-dimensional subspaces of an n-dimensional space over a
/// field of order q, extended to every integer q >= 1. Zero outside
/// 0 <= k <= n.
Integer gaussian_binomial(int n, int k, int q);

/// G_{n,q}: sum of gaussian_binomial(n, k, q) over k = 0..n.
Integer galois_number(int n, int q);

/// Power series in one variable with exact rational coefficients,
/// truncated at a fixed degree. Products are truncated at the same degree.
class FormalSeries {
public:
    explicit FormalSeries(int truncation_degree);
    FormalSeries(std::vector<Rational> coefficients);

    int truncation_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coefficient(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    void set_coefficient(int n, Rational value);
    std::span<const Rational> coefficients() const { return coeffs_; }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
    friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// exp_q(x) = sum_n x^n / (n_q)!, truncated at `degree`.
FormalSeries exp_q(int q, int degree);

struct QExpReport {
    bool holds = true;
    std::optional<int> first_failure;
};

/// Squares exp_q exactly and compares each coefficient of x^n against
/// G_{n,q} / (n_q)! for n = 0..degree.
QExpReport verify_qexp_squared(int q, int degree);

} // namespace octaves::qcalc
