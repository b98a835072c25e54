#pragma once

// Exact rational arithmetic used for all exponent bookkeeping.  Backed by
// boost::multiprecision (arbitrary-precision integers, canonical reduced
// form with positive denominator).  No floating point ever enters the
// exponent calculus; doubles appear only in rendering.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetalab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

// Parses "a", "-a", or "a/b".  Throws std::invalid_argument on junk.
Rational parse_rational(std::string_view text);

// "41/32" for non-integers, "3" for integers.
std::string to_string(const Rational& r);

// Exact decimal when the reduced denominator is of the form 2^a 5^b
// ("1.28125"), otherwise rounded to `digits` fractional digits.
std::string to_decimal_string(const Rational& r, int digits = 10);

double to_double(const Rational& r);

}  // namespace zetalab
