#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace balcov {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", plain integers, and finite decimals ("0.4" becomes 2/5 exactly).
Rational parse_rational(const std::string& text);

// Canonical form: reduced, "p/q" with q > 1, plain "p" otherwise.
std::string format_rational(const Rational& value);

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

Int int_lcm(const Int& a, const Int& b);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace balcov
