#pragma once

#include <map>
#include <optional>
#include <string>

#include "gca/central_poly.hpp"
#include "gca/pbw_monomial.hpp"

namespace gca {

// Finite linear combination of PBW basis monomials with coefficients in
// Q[C1,C2,C3] (constant polynomials for modules with a scalar center).
class ModuleVector {
 public:
  using TermMap = std::map<PBWMonomial, CentralPoly>;

  ModuleVector() = default;  // zero
  // The cyclic vector itself.
  static ModuleVector unit();
  static ModuleVector term(const PBWMonomial& m, const CentralPoly& coeff);
  static ModuleVector term(const PBWMonomial& m, const Rational& coeff);

  void add(const PBWMonomial& m, const CentralPoly& coeff);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Rational& s);
  ModuleVector& operator*=(const CentralPoly& p);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(ModuleVector v, const Rational& s) { return v *= s; }

  bool isZero() const { return terms_.empty(); }
  bool operator==(const ModuleVector& o) const { return terms_ == o.terms_; }
  const TermMap& terms() const { return terms_; }
  CentralPoly coeff(const PBWMonomial& m) const;

  // Max monomial weight over stored terms; nullopt for the zero vector.
  std::optional<long> maxdeg() const;
  // Diagnostic: max l(s)+h(s) over stored terms, the L/H multiplicity at
  // depth s. Nullopt for the zero vector.
  std::optional<unsigned> maxLH(unsigned s) const;

  // Terms in canonical key order, "coeff * monomial" joined by " + ".
  // Constant coefficients print as rationals, polynomial ones in
  // parentheses. Zero prints as "0".
  std::string str() const;

 private:
  TermMap terms_;
};

}  // namespace gca
