#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "sylv/errors.hpp"

namespace sylv {

// Exact scalars. cpp_rational keeps values in lowest terms with a positive
// denominator after every operation, which is exactly the canonical form the
// rest of the library relies on for O(1) comparisons.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// num/den reduced to lowest terms with positive denominator; den may be
/// negative here, unlike the raw two-argument constructor.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw domain_error("make_rational: zero denominator");
    return Rational(num) / Rational(den);
}

inline Integer int_pow(const Integer& base, unsigned e) {
    Integer r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

/// base^e with e possibly negative; base must be nonzero when e < 0.
inline Rational rational_pow(const Rational& base, long e) {
    if (e < 0 && base == 0) throw domain_error("rational_pow: 0 raised to a negative power");
    Rational r = 1;
    const Rational b = e < 0 ? Rational(1) / base : base;
    for (long i = 0, n = e < 0 ? -e : e; i < n; ++i) r *= b;
    return r;
}

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace sylv
