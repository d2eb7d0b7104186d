#ifndef HYP_RATIONAL_HPP
#define HYP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "hyp/error.hpp"

namespace hyp {

// Exact arbitrary-precision rational scalar. GMP keeps values in canonical
// form (lowest terms, positive denominator) as long as every entry point
// canonicalizes, so construction goes through the helpers below.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("division_by_zero", "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("division_by_zero", "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with an optional sign on p.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw ParseError(0, "invalid rational literal '" + text + "'");
    if (r.get_den() == 0)
        throw Error("division_by_zero", "rational literal with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline int sign_of(const Rational& r) { return sgn(r); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace hyp

#endif
