#pragma once

#include <array>
#include <map>
#include <string>

#include "gca/rational.hpp"

namespace gca {

// Element of the commutative polynomial ring Q[C1,C2,C3].
//
// Terms are kept in a map ordered lexicographically on the exponent triple,
// with no zero coefficients, so equal polynomials have identical term
// tables.
class CentralPoly {
 public:
  using Exponent = std::array<unsigned, 3>;
  using TermMap = std::map<Exponent, Rational>;

  CentralPoly() = default;  // the zero polynomial
  explicit CentralPoly(const Rational& constant);

  static CentralPoly generator(int index);  // C1, C2 or C3
  static CentralPoly monomial(const Exponent& alpha, const Rational& coeff);
  // Normalizes an arbitrary term table (drops zeros, merges duplicates).
  static CentralPoly fromTerms(const TermMap& terms);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  // The coefficient of C^0; requires isConstant().
  Rational constantValue() const;
  // Max total exponent over stored terms; -1 for the zero polynomial.
  int totalDegree() const;

  CentralPoly& operator+=(const CentralPoly& q);
  CentralPoly& operator-=(const CentralPoly& q);
  CentralPoly& operator*=(const CentralPoly& q);
  CentralPoly& operator*=(const Rational& s);
  friend CentralPoly operator+(CentralPoly p, const CentralPoly& q) { return p += q; }
  friend CentralPoly operator-(CentralPoly p, const CentralPoly& q) { return p -= q; }
  friend CentralPoly operator*(const CentralPoly& p, const CentralPoly& q);
  friend CentralPoly operator*(CentralPoly p, const Rational& s) { return p *= s; }
  CentralPoly operator-() const;

  bool operator==(const CentralPoly& q) const { return terms_ == q.terms_; }

  // Evaluates at C_s = xi[s-1].
  Rational substitute(const std::array<Rational, 3>& xi) const;

  const TermMap& terms() const { return terms_; }

  // "3/2*C1^2*C3 + -1*C2": terms in lexicographically descending exponent
  // order, explicit rational coefficient, '^' for exponents > 1, variables
  // with exponent 0 omitted. The zero polynomial prints as "0".
  std::string str() const;

 private:
  void addTerm(const Exponent& alpha, const Rational& coeff);
  TermMap terms_;
};

CentralPoly operator*(const Rational& s, const CentralPoly& p);

}  // namespace gca
