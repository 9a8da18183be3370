#include "octaves/qcalc.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace octaves::qcalc {
namespace {

void require_q(int q) {
    if (q < 1) {
        throw std::invalid_argument("q must be >= 1, got " + std::to_string(q));
    }
}

void require_nonnegative(int n, const char* what) {
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + " must be >= 0, got " + std::to_string(n));
    }
}

} // namespace

Integer q_integer(int n, int q) {
    require_q(q);
    require_nonnegative(n, "n");
    Integer sum = 0;
    Integer power = 1;
    for (int i = 0; i < n; ++i) {
        sum += power;
        power *= q;
    }
    return sum;
}

Integer q_factorial(int n, int q) {
    require_q(q);
    require_nonnegative(n, "n");
    Integer product = 1;
    for (int m = 1; m <= n; ++m) {
        product *= q_integer(m, q);
    }
    return product;
}

Integer gaussian_binomial(int n, int k, int q) {
    require_q(q);
    require_nonnegative(n, "n");
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // After step i the accumulator equals [n-k+i, i]_q, so each division is exact.
    Integer result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= q_integer(n - k + i, q);
        mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), q_integer(i, q).get_mpz_t());
    }
    return result;
}

Integer galois_number(int n, int q) {
    require_q(q);
    require_nonnegative(n, "n");
    Integer sum = 0;
    for (int k = 0; k <= n; ++k) {
        sum += gaussian_binomial(n, k, q);
    }
    return sum;
}

FormalSeries::FormalSeries(int truncation_degree) {
    require_nonnegative(truncation_degree, "truncation degree");
    coeffs_.assign(static_cast<std::size_t>(truncation_degree) + 1, Rational(0));
}

FormalSeries::FormalSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("a formal series needs at least the constant coefficient");
    }
}

void FormalSeries::set_coefficient(int n, Rational value) {
    coeffs_.at(static_cast<std::size_t>(n)) = std::move(value);
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    if (a.truncation_degree() != b.truncation_degree()) {
        throw std::invalid_argument("formal series truncation degrees differ");
    }
    const int degree = a.truncation_degree();
    FormalSeries product(degree);
    for (int n = 0; n <= degree; ++n) {
        Rational sum = 0;
        for (int i = 0; i <= n; ++i) {
            sum += a.coefficient(i) * b.coefficient(n - i);
        }
        product.set_coefficient(n, sum);
    }
    return product;
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    if (a.truncation_degree() != b.truncation_degree()) {
        throw std::invalid_argument("formal series truncation degrees differ");
    }
    FormalSeries sum(a.truncation_degree());
    for (int n = 0; n <= a.truncation_degree(); ++n) {
        sum.set_coefficient(n, a.coefficient(n) + b.coefficient(n));
    }
    return sum;
}

FormalSeries exp_q(int q, int degree) {
    require_q(q);
    FormalSeries series(degree);
    for (int n = 0; n <= degree; ++n) {
        Rational c(Integer(1), q_factorial(n, q));
        c.canonicalize();
        series.set_coefficient(n, c);
    }
    return series;
}

QExpReport verify_qexp_squared(int q, int degree) {
    require_q(q);
    require_nonnegative(degree, "degree");
    const FormalSeries e = exp_q(q, degree);
    const FormalSeries square = e * e;

    QExpReport report;
    for (int n = 0; n <= degree; ++n) {
        Rational expected(galois_number(n, q), q_factorial(n, q));
        expected.canonicalize();
        if (square.coefficient(n) != expected) {
            report.holds = false;
            report.first_failure = n;
            break;
        }
    }
    return report;
}

} // namespace octaves::qcalc
