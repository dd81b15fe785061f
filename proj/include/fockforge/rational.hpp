#pragma once
// Exact rational coefficients backed by GMP.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fockforge {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace fockforge
