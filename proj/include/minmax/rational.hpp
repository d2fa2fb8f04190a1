// Exact arbitrary-precision integers and rationals, plus the small
// combinatorial helpers the closed-form read-count formulas need.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace minmax {

using Integer = boost::multiprecision::cpp_int;

// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// C(n, r) by the multiplicative recurrence; every intermediate division is
// exact. Returns 0 for r > n.
Integer binomial(unsigned n, unsigned r);

Integer factorial(unsigned n);

// Accepts "p", "p/q", with an optional leading sign on the numerator and a
// plain positive integer denominator. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// "p" when the value is an integer, "p/q" in lowest terms otherwise.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

}  // namespace minmax
