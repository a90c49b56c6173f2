#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace colorgame {

// Exact rational arithmetic backed by GMP. Every payoff value, welfare and
// certificate in the library is a Rational; nothing is converted to floating
// point except for human-facing summaries.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// "p/q" with q >= 1; integers are written as "p/1".
std::string to_string(const Rational& r);

// Accepts "p/q", "p" and "-p/q". Throws ValidationError on anything else or on
// a zero denominator.
Rational parse_rational(std::string_view text);

Integer numerator_of(const Rational& r);
Integer denominator_of(const Rational& r);

Rational ceil_div(const Rational& r);  // smallest integer >= r
Rational floor_of(const Rational& r);  // largest integer <= r

double to_double(const Rational& r);

}  // namespace colorgame
