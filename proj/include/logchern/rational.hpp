#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace logchern {

// GMP rationals are kept canonical by every arithmetic operation; only
// construction from a raw numerator/denominator needs explicit canonicalization.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator = 1);

// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "n", "-n", "n/d" with d != 0; surrounding whitespace ignored.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Integer to_integer(const Rational& q);  // throws UsageError when q is not integral

Rational power(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);
// Binomial coefficient with the combinatorial convention: 0 when k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace logchern
