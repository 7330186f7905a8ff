#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace tvw {

// Exact rational scalar used throughout the geometry layer. GMP keeps the
// value canonical (denominator > 0, gcd(|num|, den) = 1) under arithmetic;
// parse_rational canonicalizes explicitly since string construction does not.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "num/den" or a plain integer. The denominator must be nonzero.
Rational parse_rational(const std::string& token);

// Formats as "num/den", including a unit denominator ("2" -> "2/1").
std::string format_rational(const Rational& value);

}  // namespace tvw
