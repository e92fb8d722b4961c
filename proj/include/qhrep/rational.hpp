#pragma once

#include <gmpxx.h>

#include <string>

namespace qhrep {

// Arbitrary-precision exact arithmetic. GMP canonicalizes results of
// arithmetic, but mpq_class(num, den) does not; use make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Canonical form, GMP style: "3", "-1/3", "2/5", "0".
std::string to_string(const Rational& r);

// Accepts "P/Q" or a bare integer. Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Integer exponent, negative allowed for nonzero base.
Rational rational_pow(const Rational& base, long exp);

Integer factorial(unsigned long n);

double to_double(const Rational& r);

}  // namespace qhrep
