#include <doctest.h>

#include "gca/bracket.hpp"
#include "gca/checks.hpp"
#include "gca/errors.hpp"
#include "gca/whittaker.hpp"

using namespace gca;

namespace {
GeneratorId L(int m) { return GeneratorId::modal(Family::L, m); }
GeneratorId H(int m) { return GeneratorId::modal(Family::H, m); }
GeneratorId I(int m) { return GeneratorId::modal(Family::I, m); }
GeneratorId J(int m) { return GeneratorId::modal(Family::J, m); }
}  // namespace

TEST_CASE("bracket table entries") {
  SUBCASE("[L1, L-1] with central charge") {
    LieElement expected = LieElement::term(L(0), Rational(-2));
    expected.add(GeneratorId::central(1), Rational(1));
    CHECK(bracketGen(AlgebraKind::Central, L(1), L(-1)) == expected);
  }
  SUBCASE("[L2, H-2] with central charge") {
    LieElement expected = LieElement::term(H(0), Rational(-2));
    expected.add(GeneratorId::central(2), Rational(4));
    CHECK(bracketGen(AlgebraKind::Central, L(2), H(-2)) == expected);
  }
  SUBCASE("I and J commute") {
    CHECK(bracketGen(AlgebraKind::Central, I(5), J(-3)).isZero());
    CHECK(bracketGen(AlgebraKind::Centerless, I(2), I(-2)).isZero());
    CHECK(bracketGen(AlgebraKind::Central, J(1), J(-1)).isZero());
  }
  SUBCASE("[H0, I7]") {
    CHECK(bracketGen(AlgebraKind::Central, H(0), I(7)) ==
          LieElement::term(I(7), Rational(1)));
  }
  SUBCASE("[H1, H-1] differs between the two kinds") {
    CHECK(bracketGen(AlgebraKind::Centerless, H(1), H(-1)).isZero());
    CHECK(bracketGen(AlgebraKind::Central, H(1), H(-1)) ==
          LieElement::term(GeneratorId::central(3), Rational(1)));
  }
  SUBCASE("central generators are central") {
    CHECK(bracketGen(AlgebraKind::Central, GeneratorId::central(1), L(4)).isZero());
    CHECK(bracketGen(AlgebraKind::Central, GeneratorId::central(2),
                     GeneratorId::central(3))
              .isZero());
  }
}

TEST_CASE("bilinear extension") {
  SUBCASE("[L1 + H1, I0] collapses") {
    LieElement x = LieElement::term(L(1), Rational(1));
    x.add(H(1), Rational(1));
    const LieElement y = LieElement::term(I(0), Rational(1));
    CHECK(bracketElem(AlgebraKind::Centerless, x, y).isZero());
  }
  SUBCASE("alternating") {
    LieElement x = LieElement::term(L(2), Rational(3));
    x.add(H(-1), Rational(-1, 2));
    x.add(J(0), Rational(5));
    CHECK(bracketElem(AlgebraKind::Central, x, x).isZero());
  }
  SUBCASE("scaling") {
    const LieElement x = LieElement::term(L(1), Rational(2));
    const LieElement y = LieElement::term(L(-1), Rational(1));
    LieElement expected = LieElement::term(L(0), Rational(-4));
    expected.add(GeneratorId::central(1), Rational(2));
    CHECK(bracketElem(AlgebraKind::Central, x, y) == expected);
  }
}

TEST_CASE("homomorphism evaluation") {
  const WhittakerHom phi{makeRational(1), makeRational(-1), makeRational(2),
                         makeRational(3), makeRational(5)};
  CHECK(phiEval(phi, L(3)) == 0);
  CHECK(phiEval(phi, L(1)) == 1);
  CHECK(phiEval(phi, L(2)) == -1);
  CHECK(phiEval(phi, H(2)) == 0);
  CHECK(phiEval(phi, I(1)) == 3);
  CHECK(phiEval(phi, J(1)) == 5);
  CHECK_THROWS_AS(phiEval(phi, L(0)), DomainError);
  CHECK_THROWS_AS(phiEval(phi, H(-2)), DomainError);
  CHECK_THROWS_AS(phiEval(phi, GeneratorId::central(1)), DomainError);
  CHECK(phi.nonsingular());
  const WhittakerHom sing{makeRational(1), makeRational(-1), makeRational(2),
                          makeRational(0), makeRational(5)};
  CHECK_FALSE(sing.nonsingular());
}

TEST_CASE("algebra invariants at unit-test scale") {
  CHECK(checkBracketAntisymmetry(4).pass);
  CHECK(checkJacobi(3).pass);
  CHECK(checkBracketGrading(4).pass);
  CHECK(checkPhiConsistency(6).pass);
}

TEST_CASE("a flipped structure constant is caught") {
  // Mutation check: [L_n, L_m] with the sign of (m - n) flipped breaks the
  // Jacobi identity, so the suite must be able to fail.
  auto mutatedBracket = [](GeneratorId a, GeneratorId b) {
    LieElement out = bracketGen(AlgebraKind::Centerless, a, b);
    if (!a.isCentral() && !b.isCentral() && a.family() == Family::L &&
        b.family() == Family::L) {
      out *= Rational(-1);
    }
    return out;
  };
  bool jacobiHolds = true;
  for (int n = -2; n <= 2 && jacobiHolds; ++n) {
    for (int m = -2; m <= 2 && jacobiHolds; ++m) {
      for (int p = -2; p <= 2 && jacobiHolds; ++p) {
        LieElement sum;
        auto term = [&](GeneratorId x, const LieElement& yz) {
          for (const auto& [g, c] : yz.terms()) {
            LieElement part = mutatedBracket(x, g);
            part *= c;
            sum += part;
          }
        };
        term(L(n), mutatedBracket(L(m), H(p)));
        term(L(m), mutatedBracket(H(p), L(n)));
        term(H(p), mutatedBracket(L(n), L(m)));
        if (!sum.isZero()) jacobiHolds = false;
      }
    }
  }
  CHECK_FALSE(jacobiHolds);
}
