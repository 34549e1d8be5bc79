#include <doctest.h>

#include "gca/central_poly.hpp"
#include "gca/checks.hpp"
#include "gca/errors.hpp"

using namespace gca;

namespace {
CentralPoly C(int s) { return CentralPoly::generator(s); }
CentralPoly K(long num, long den = 1) { return CentralPoly(makeRational(num, den)); }
}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parseRational("3/4") == makeRational(3, 4));
  CHECK(parseRational("-6/4") == makeRational(-3, 2));
  CHECK(parseRational("0") == 0);
  CHECK(toString(parseRational("-6/4")) == "-3/2");
  CHECK(toString(parseRational("7")) == "7");
  CHECK_THROWS_AS(parseRational("1/0"), ParseError);
  CHECK_THROWS_AS(parseRational("a"), ParseError);
  CHECK_THROWS_AS(parseRational("1/2/3"), ParseError);
  CHECK_THROWS_AS(parseRational(""), ParseError);
}

TEST_CASE("polynomial addition") {
  CHECK(C(1) + K(2) + (-C(1)) == K(2));             // cancellation
  CHECK(CentralPoly() + C(2) * C(3) == C(2) * C(3)); // identity
  CHECK(K(1, 2) * C(1) + K(1, 2) * C(1) == C(1));    // 1/2 C1 + 1/2 C1
}

TEST_CASE("polynomial multiplication") {
  CHECK(C(1) * C(2) == CentralPoly::monomial({1, 1, 0}, Rational(1)));
  CHECK((C(1) + K(1)) * (C(1) + K(-1)) ==
        CentralPoly::monomial({2, 0, 0}, Rational(1)) + K(-1));
  CHECK(CentralPoly() * (C(1) + C(2) * C(3)) == CentralPoly());
  SUBCASE("degree of a product of nonzero polynomials is additive") {
    const CentralPoly p = C(1) * C(1) + C(2);
    const CentralPoly q = C(3) + K(4);
    CHECK((p * q).totalDegree() == p.totalDegree() + q.totalDegree());
  }
}

TEST_CASE("substitution") {
  const std::array<Rational, 3> xi1{Rational(0), Rational(0), Rational(2)};
  CHECK(C(3).substitute(xi1) == 2);
  const std::array<Rational, 3> xi2{Rational(2), Rational(1), Rational(0)};
  CHECK((C(1) * C(1) + C(2)).substitute(xi2) == 5);
  const std::array<Rational, 3> xi3{Rational(-7), Rational(9), Rational(1)};
  CHECK(K(7).substitute(xi3) == 7);
}

TEST_CASE("degrees") {
  CHECK(CentralPoly().totalDegree() == -1);
  CHECK(K(5).totalDegree() == 0);
  CHECK((K(3, 2) * C(1) * C(1) * C(3) + (-C(2))).totalDegree() == 3);
}

TEST_CASE("serialization") {
  const CentralPoly p = K(3, 2) * C(1) * C(1) * C(3) + (-C(2));
  CHECK(p.str() == "3/2*C1^2*C3 + -1*C2");
  CHECK(K(0).str() == "0");
  CHECK(K(-7, 3).str() == "-7/3");
  CHECK(C(2).str() == "1*C2");
}

TEST_CASE("ring properties on random samples") {
  CHECK(checkCoeffRingAxioms(1000, 42).pass);
  CHECK(checkCoeffCanonicalIdempotence(200, 43).pass);
  CHECK(checkCoeffSubstituteHom(500, 44).pass);
}
