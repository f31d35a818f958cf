#pragma once

#include <gmpxx.h>

#include <string>

namespace saito {

// Exact arbitrary-precision rational; all coefficient arithmetic goes
// through this type. GMP keeps values canonical (lowest terms) under
// arithmetic; only raw numerator/denominator construction needs an
// explicit canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace saito
