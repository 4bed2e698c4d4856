#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace disckit {

// Exact scalars. Every quantity the toolkit computes is a rational whose
// denominator divides a product of small color counts and digit-base powers,
// so all comparisons are decidable and zero-tolerance.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
inline Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

// num/den with the sign moved onto the numerator. The two-argument
// cpp_rational constructor rejects negative denominators outright, so every
// construction whose denominator is computed (differences of row sums and the
// like) must go through here. den must be nonzero.
inline Rational make_ratio(const Int& num, const Int& den) {
    return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

//! Floor of a rational (toward minus infinity, unlike cpp_int division).
Int rat_floor(const Rational& r);

//! base^exp for exp >= 0.
Int int_pow(const Int& base, unsigned exp);

//! Canonical text form: "p" when the denominator is 1, else "p/q" in lowest
//! terms with positive q. This is the only rendering used in certificates,
//! so equal values always serialize to equal bytes.
std::string rat_str(const Rational& r);

//! Parses "p", "p/q", or a plain decimal like "-1.25". Whitespace at either
//! end is ignored. Throws InputError on anything else (including q = 0).
Rational parse_rational(const std::string& text);

}  // namespace disckit
