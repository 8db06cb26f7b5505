#pragma once

// Exact scalar types used throughout the library: arbitrary-precision
// integers and canonical rationals (GMP-backed), wired into Eigen via the
// boost.multiprecision NumTraits bridge.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace sigmatau {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// True iff r has denominator 1.
bool is_integer(const Rational& r);

/// Integer value of r; pre: is_integer(r).
Integer to_integer(const Rational& r);

/// True iff a divides b (a != 0).
bool divides(const Integer& a, const Integer& b);

/// Parses "p", "-p" or "p/q" (q > 0, no whitespace). Throws Error{BadInput}.
Rational parse_rational(const std::string& s);
Integer parse_integer(const std::string& s);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

}  // namespace sigmatau
