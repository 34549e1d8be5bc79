#include <doctest.h>

#include "gca/action.hpp"
#include "gca/checks.hpp"
#include "gca/errors.hpp"

using namespace gca;

namespace {

const WhittakerHom kPhi{makeRational(1), makeRational(-1), makeRational(2),
                        makeRational(3), makeRational(5)};
const WhittakerHom kPhiSingular{makeRational(1), makeRational(-1), makeRational(2),
                                makeRational(0), makeRational(0)};
const Xi kXi{makeRational(1), makeRational(0), makeRational(2)};

PBWMonomial monoJ(std::initializer_list<unsigned> p) {
  return PBWMonomial{Partition::fromParts(p), {}, {}, {}};
}
PBWMonomial monoI(std::initializer_list<unsigned> p) {
  return PBWMonomial{{}, Partition::fromParts(p), {}, {}};
}
PBWMonomial monoH(std::initializer_list<unsigned> p) {
  return PBWMonomial{{}, {}, Partition::fromParts(p), {}};
}
PBWMonomial monoL(std::initializer_list<unsigned> p) {
  return PBWMonomial{{}, {}, {}, Partition::fromParts(p)};
}

}  // namespace

TEST_CASE("module construction validates its parameters") {
  CHECK_NOTHROW(ModuleCtx::make(ModuleKind::Generic, kPhi, kXi));
  CHECK_NOTHROW(ModuleCtx::make(ModuleKind::UniversalCentral, kPhi));
  CHECK_NOTHROW(ModuleCtx::make(ModuleKind::QuotientOmegaTilde, kPhiSingular,
                                kXi, makeRational(5)));
  SUBCASE("missing parameters") {
    CHECK_THROWS_AS(ModuleCtx::make(ModuleKind::Generic, kPhi), ParamError);
    CHECK_THROWS_AS(ModuleCtx::make(ModuleKind::QuotientOmegaTilde, kPhiSingular, kXi),
                    ParamError);
  }
  SUBCASE("parameters the kind does not accept") {
    CHECK_THROWS_AS(ModuleCtx::make(ModuleKind::UniversalCentral, kPhi, kXi),
                    ParamError);
    CHECK_THROWS_AS(ModuleCtx::make(ModuleKind::Generic, kPhi, kXi, makeRational(1)),
                    ParamError);
  }
  SUBCASE("killed spans need the right vanishing") {
    CHECK_THROWS_AS(ModuleCtx::make(ModuleKind::QuotientOmega, kPhi), ClosureError);
    CHECK_THROWS_AS(ModuleCtx::make(ModuleKind::QuotientGamma, kPhi), ClosureError);
    CHECK_THROWS_AS(ModuleCtx::make(ModuleKind::QuotientUpsilon, kPhi), ClosureError);
    const WhittakerHom gammaOk{makeRational(1), makeRational(-1), makeRational(2),
                               makeRational(0), makeRational(5)};
    CHECK_NOTHROW(ModuleCtx::make(ModuleKind::QuotientGamma, gammaOk));
    CHECK_THROWS_AS(ModuleCtx::make(ModuleKind::QuotientOmega, gammaOk), ClosureError);
  }
}

TEST_CASE("window enumeration") {
  SUBCASE("generic bound 1 has the nine expected labels") {
    const ModuleCtx ctx = ModuleCtx::make(ModuleKind::Generic, kPhi, kXi);
    const auto labels = enumerateWindow(ctx, Window{1});
    REQUIRE(labels.size() == 9);
    CHECK(labels[0].mono.isUnit());
    CHECK(labels[1].mono == monoL({0}));
    CHECK(labels[2].mono == monoH({0}));
    CHECK(labels[3].mono == monoI({0}));
    CHECK(labels[4].mono == monoJ({0}));
    CHECK(labels[5].mono == monoL({1}));
    CHECK(labels[6].mono == monoH({1}));
    CHECK(labels[7].mono == monoI({1}));
    CHECK(labels[8].mono == monoJ({1}));
  }
  SUBCASE("bound 0 is the cyclic line") {
    const ModuleCtx ctx = ModuleCtx::make(ModuleKind::UniversalCenterless, kPhi);
    CHECK(enumerateWindow(ctx, Window{0}).size() == 1);
    const ModuleCtx central = ModuleCtx::make(ModuleKind::UniversalCentral, kPhi);
    CHECK(enumerateWindow(central, Window{0}).size() == 1);
  }
  SUBCASE("symbolic center adds central monomial labels") {
    const ModuleCtx central = ModuleCtx::make(ModuleKind::UniversalCentral, kPhi);
    // 4 labels on the unit monomial (|alpha| <= 1) plus 8 weight/zero-mode
    // monomials with alpha = 0.
    CHECK(enumerateWindow(central, Window{1}).size() == 12);
  }
  SUBCASE("omega-tilde quotient drops I, J and H[0]") {
    const ModuleCtx ctx = ModuleCtx::make(ModuleKind::QuotientOmegaTilde,
                                          kPhiSingular, kXi, makeRational(5));
    const auto labels = enumerateWindow(ctx, Window{1});
    REQUIRE(labels.size() == 4);
    CHECK(labels[0].mono.isUnit());
    CHECK(labels[1].mono == monoL({0}));
    CHECK(labels[2].mono == monoL({1}));
    CHECK(labels[3].mono == monoH({1}));
  }
}

TEST_CASE("quotient reduction") {
  SUBCASE("omega kills I and J factors") {
    const ModuleCtx ctx = ModuleCtx::make(ModuleKind::QuotientOmega, kPhiSingular);
    CHECK(quotientReduce(ctx, ModuleVector::term(monoI({0}), Rational(1))).isZero());
    CHECK(quotientReduce(ctx, ModuleVector::term(monoL({1}), Rational(1))) ==
          ModuleVector::term(monoL({1}), Rational(1)));
  }
  SUBCASE("omega-tilde replaces H[0] by c") {
    const ModuleCtx ctx = ModuleCtx::make(ModuleKind::QuotientOmegaTilde,
                                          kPhiSingular, kXi, makeRational(5));
    PBWMonomial m;
    m.h = Partition::fromParts({0, 0});
    m.l = Partition::fromParts({1});
    CHECK(quotientReduce(ctx, ModuleVector::term(m, Rational(1))) ==
          ModuleVector::term(monoL({1}), makeRational(25)));
  }
  SUBCASE("gamma leaves J factors alone") {
    const WhittakerHom gammaOk{makeRational(1), makeRational(-1), makeRational(2),
                               makeRational(0), makeRational(5)};
    const ModuleCtx ctx = ModuleCtx::make(ModuleKind::QuotientGamma, gammaOk);
    CHECK(quotientReduce(ctx, ModuleVector::term(monoJ({1}), Rational(1))) ==
          ModuleVector::term(monoJ({1}), Rational(1)));
    CHECK(quotientReduce(ctx, ModuleVector::term(monoI({2}), Rational(1))).isZero());
  }
  SUBCASE("identity for non-quotient kinds") {
    const ModuleCtx ctx = ModuleCtx::make(ModuleKind::UniversalCentral, kPhi);
    const ModuleVector v = ModuleVector::term(monoI({0}), CentralPoly::generator(2));
    CHECK(quotientReduce(ctx, v) == v);
  }
}

TEST_CASE("killed-span membership") {
  CHECK(submoduleMembership(ModuleKind::QuotientOmega, monoI({0})));
  PBWMonomial hl;
  hl.h = Partition::fromParts({2});
  hl.l = Partition::fromParts({1});
  CHECK_FALSE(submoduleMembership(ModuleKind::QuotientOmega, hl));
  PBWMonomial ji;
  ji.j = Partition::fromParts({3});
  ji.i = Partition::fromParts({1});
  CHECK(submoduleMembership(ModuleKind::QuotientUpsilon, ji));
  CHECK_FALSE(submoduleMembership(ModuleKind::QuotientGamma, monoJ({1})));
  CHECK_THROWS_AS(submoduleMembership(ModuleKind::Generic, monoI({0})), DomainError);

  SUBCASE("the two span readings differ exactly on zero-mode factors") {
    // I[0] w has a factor from the killed ideal but weight zero, so the
    // factor-count reading keeps it in the span and the weight reading
    // drops it.
    CHECK(submoduleMembership(ModuleKind::QuotientOmega, monoI({0}),
                              SpanRule::FactorCount));
    CHECK_FALSE(submoduleMembership(ModuleKind::QuotientOmega, monoI({0}),
                                    SpanRule::Weight));
    // Under the weight reading the span is not closed: acting with H[1] on
    // I[-1] w lands on I[0] w, which the weight reading excludes.
    const ModuleCtx parent =
        ModuleCtx::make(ModuleKind::UniversalCenterless, kPhiSingular);
    const ModuleVector image = actGen(
        parent, GeneratorId::modal(Family::H, 1),
        ModuleVector::term(monoI({1}), Rational(1)));
    bool escapes = false;
    for (const auto& [m, c] : image.terms()) {
      (void)c;
      if (!submoduleMembership(ModuleKind::QuotientOmega, m, SpanRule::Weight))
        escapes = true;
    }
    CHECK(escapes);
  }
}

TEST_CASE("module invariants at unit-test scale") {
  CHECK(checkProperness().pass);
  CHECK(checkSubmoduleClosure(3, 2).pass);
  CHECK(checkQuotientCompat(80, 3).pass);
  CHECK(checkWindowClosure(3).pass);
}
