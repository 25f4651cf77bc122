#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace sq3 {

// Arbitrary-precision rational; GMP keeps the canonical form
// (gcd(|num|, den) = 1, den > 0) after every operation.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string fraction_string(const Rational& q) {
    return q.get_str();
}

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace sq3
