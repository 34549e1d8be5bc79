#pragma once

#include <map>
#include <string>

#include "gca/generator.hpp"
#include "gca/rational.hpp"

namespace gca {

// Which structure-constant table governs a computation: the plain algebra
// or its universal central extension.
enum class AlgebraKind { Centerless, Central };

// Finite rational linear combination of generators, canonical term table.
class LieElement {
 public:
  using TermMap = std::map<GeneratorId, Rational>;

  LieElement() = default;  // zero
  static LieElement term(GeneratorId g, const Rational& coeff);

  void add(GeneratorId g, const Rational& coeff);
  LieElement& operator+=(const LieElement& o);
  LieElement& operator*=(const Rational& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  LieElement operator-() const;

  bool isZero() const { return terms_.empty(); }
  bool operator==(const LieElement& o) const { return terms_ == o.terms_; }
  const TermMap& terms() const { return terms_; }

  // "-2*L[0] + 1*C1"; zero prints as "0".
  std::string str() const;

 private:
  TermMap terms_;
};

// Structure-constant bracket of two basis generators. Central generators
// bracket to zero with everything; pairs absent from the table ([I,I],
// [I,J], [J,J]) give zero. For Centerless the central-charge terms are
// dropped.
LieElement bracketGen(AlgebraKind kind, GeneratorId a, GeneratorId b);

// Bilinear extension of bracketGen.
LieElement bracketElem(AlgebraKind kind, const LieElement& x, const LieElement& y);

}  // namespace gca
