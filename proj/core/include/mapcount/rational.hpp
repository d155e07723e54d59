#pragma once

#include <gmpxx.h>

#include <string>

namespace mapcount {

// All counting arithmetic is exact. Rationals are kept canonical (reduced,
// positive denominator), which mpq_class guarantees after canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (base 10, arbitrary precision). Rejects anything
/// else, including zero denominators.
Rational parse_rational(const std::string& text);

/// Canonical text form, inverse of parse_rational: "p" or "p/q".
std::string to_string(const Rational& value);

/// True iff the rational is an integer; `out` receives the numerator.
bool as_integer(const Rational& value, Integer& out);

Integer factorial(unsigned long n);

/// (2n-1)!! for odd argument sweeps; double_factorial(0) = 1.
Integer double_factorial(unsigned long n);

/// Binomial coefficient with the combinatorial convention: 0 when k < 0 or k > n.
Integer binomial(long n, long k);

Integer pow_integer(const Integer& base, unsigned long exp);
Rational pow_rational(const Rational& base, long exp);

/// 2*nu*binomial(2*nu - 1, nu - 1): the vertex weight attached to one
/// derivative step of the generating functions.
Integer vertex_weight(int nu);

}  // namespace mapcount
