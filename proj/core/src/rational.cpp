#include "gca/rational.hpp"

#include <cctype>

#include "gca/errors.hpp"

namespace gca {

Rational makeRational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parseRational(std::string_view text) {
  // Grammar: -?[0-9]+(/[0-9]+)?  with a nonzero denominator.
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const char* msg) -> Rational {
    throw ParseError(std::string("invalid rational '") + std::string(text) +
                         "': " + msg,
                     i);
  };
  if (i < n && text[i] == '-') ++i;
  std::size_t numStart = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == numStart) return fail("expected digits");
  std::size_t denStart = 0;
  if (i < n && text[i] == '/') {
    ++i;
    denStart = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == denStart) return fail("expected denominator digits");
  }
  if (i != n) return fail("trailing characters");

  Rational r;
  if (denStart == 0) {
    r = Rational(std::string(text), 10);
  } else {
    Integer num(std::string(text.substr(0, denStart - 1)), 10);
    Integer den(std::string(text.substr(denStart)), 10);
    if (den == 0) return fail("zero denominator");
    r = Rational(num) / Rational(den);
  }
  r.canonicalize();
  return r;
}

std::string toString(const Rational& r) { return r.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational acc(1);
  for (unsigned t = 0; t < exponent; ++t) acc *= base;
  return acc;
}

}  // namespace gca
