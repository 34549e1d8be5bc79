#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gca {

// Exact rational scalar. GMP keeps values reduced with a positive
// denominator, so every Rational is in canonical form (zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

// Builds a canonical rational from machine integers.
Rational makeRational(long num, long den = 1);

// Parses "p/q" or "p" with an optional leading minus; the denominator, when
// present, must be a positive integer literal. Throws ParseError otherwise.
Rational parseRational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string toString(const Rational& r);

Integer binomial(unsigned long n, unsigned long k);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace gca
