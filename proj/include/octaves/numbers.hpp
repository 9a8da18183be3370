#pragma once

#include <gmpxx.h>

#include <string>

namespace octaves {

/// Exact arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational, always kept in lowest terms.
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& value) { return value.get_str(); }

/// Builds p/q in canonical form. q must be nonzero.
inline Rational make_rational(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

} // namespace octaves
