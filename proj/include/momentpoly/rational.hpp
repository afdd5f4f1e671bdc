#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace momentpoly {

using Integer = boost::multiprecision::cpp_int;
// Always stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "a" or "a/b" with optional leading '-' on a; b must be positive.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "a" when the denominator is 1, else "a/b".
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

Integer rat_num(const Rational& r);
Integer rat_den(const Rational& r);

} // namespace momentpoly
