#include "gca/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gca/errors.hpp"

namespace gca {

WhittakerHom suiteNonsingularHom() {
  return {makeRational(1), makeRational(-1), makeRational(2), makeRational(3),
          makeRational(5)};
}
WhittakerHom suiteSingularBothHom() {
  return {makeRational(1), makeRational(-1), makeRational(2), makeRational(0),
          makeRational(0)};
}
WhittakerHom suiteSingularGammaHom() {
  return {makeRational(1), makeRational(-1), makeRational(2), makeRational(0),
          makeRational(5)};
}
WhittakerHom suiteSingularUpsilonHom() {
  return {makeRational(1), makeRational(-1), makeRational(2), makeRational(3),
          makeRational(0)};
}
Xi suiteXi() { return {makeRational(1), makeRational(0), makeRational(2)}; }

namespace {

Rational randomRational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return makeRational(num(rng), den(rng));
}

CentralPoly randomPoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<unsigned> expo(0, 3);
  CentralPoly p;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    CentralPoly::Exponent alpha{expo(rng), expo(rng), expo(rng)};
    p += CentralPoly::monomial(alpha, randomRational(rng));
  }
  return p;
}

std::vector<GeneratorId> modalGenerators(int maxMode) {
  std::vector<GeneratorId> out;
  for (Family f : {Family::L, Family::H, Family::I, Family::J})
    for (int m = -maxMode; m <= maxMode; ++m)
      out.push_back(GeneratorId::modal(f, m));
  return out;
}

CheckResult failWith(CheckResult r, const std::string& detail) {
  r.pass = false;
  r.detail = detail;
  return r;
}

// All monomials with weight + zeroCount <= budget (the finite slice the
// window machinery works over).
std::vector<PBWMonomial> monomialsUpTo(unsigned budget) {
  std::vector<PBWMonomial> out;
  forEachMonomial(budget, [&](const PBWMonomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  return out;
}

struct NamedCtx {
  std::string name;
  ModuleCtx ctx;
};

std::vector<NamedCtx> suiteContexts() {
  std::vector<NamedCtx> out;
  out.push_back({"universal-centerless",
                 ModuleCtx::make(ModuleKind::UniversalCenterless,
                                 suiteNonsingularHom())});
  out.push_back({"universal-central",
                 ModuleCtx::make(ModuleKind::UniversalCentral,
                                 suiteNonsingularHom())});
  out.push_back({"generic", ModuleCtx::make(ModuleKind::Generic,
                                            suiteNonsingularHom(), suiteXi())});
  out.push_back({"quotient-omega",
                 ModuleCtx::make(ModuleKind::QuotientOmega, suiteSingularBothHom())});
  out.push_back({"quotient-omega-tilde",
                 ModuleCtx::make(ModuleKind::QuotientOmegaTilde,
                                 suiteSingularBothHom(), suiteXi(), makeRational(5))});
  out.push_back({"quotient-gamma",
                 ModuleCtx::make(ModuleKind::QuotientGamma, suiteSingularGammaHom())});
  out.push_back({"quotient-upsilon",
                 ModuleCtx::make(ModuleKind::QuotientUpsilon,
                                 suiteSingularUpsilonHom())});
  return out;
}

}  // namespace

CheckResult checkCoeffRingAxioms(int samples, std::uint32_t seed) {
  CheckResult r{"coeff ring axioms", true, 0, ""};
  std::mt19937 rng(seed);
  for (int t = 0; t < samples; ++t) {
    const CentralPoly p = randomPoly(rng), q = randomPoly(rng), s = randomPoly(rng);
    ++r.cases;
    const bool ok = (p + q) + s == p + (q + s) && p + q == q + p &&
                    (p * q) * s == p * (q * s) && p * q == q * p &&
                    p * (q + s) == p * q + p * s;
    if (!ok)
      return failWith(r, "triple (" + p.str() + ", " + q.str() + ", " + s.str() + ")");
  }
  return r;
}

CheckResult checkCoeffCanonicalIdempotence(int samples, std::uint32_t seed) {
  CheckResult r{"coeff canonical form idempotent", true, 0, ""};
  std::mt19937 rng(seed);
  for (int t = 0; t < samples; ++t) {
    const CentralPoly p = randomPoly(rng);
    ++r.cases;
    if (!(CentralPoly::fromTerms(p.terms()) == p))
      return failWith(r, p.str());
  }
  return r;
}

CheckResult checkCoeffSubstituteHom(int samples, std::uint32_t seed) {
  CheckResult r{"coeff substitution is a ring homomorphism", true, 0, ""};
  std::mt19937 rng(seed);
  for (int t = 0; t < samples; ++t) {
    const CentralPoly p = randomPoly(rng), q = randomPoly(rng);
    const std::array<Rational, 3> xi{randomRational(rng), randomRational(rng),
                                     randomRational(rng)};
    ++r.cases;
    const bool ok = (p * q).substitute(xi) == p.substitute(xi) * q.substitute(xi) &&
                    (p + q).substitute(xi) == p.substitute(xi) + q.substitute(xi);
    if (!ok) return failWith(r, "pair (" + p.str() + ", " + q.str() + ")");
  }
  return r;
}

CheckResult checkBracketAntisymmetry(int maxMode) {
  CheckResult r{"bracket antisymmetry", true, 0, ""};
  std::vector<GeneratorId> gens = modalGenerators(maxMode);
  for (int s = 1; s <= 3; ++s) gens.push_back(GeneratorId::central(s));
  for (AlgebraKind kind : {AlgebraKind::Centerless, AlgebraKind::Central}) {
    for (const GeneratorId a : gens) {
      for (const GeneratorId b : gens) {
        ++r.cases;
        LieElement sum = bracketGen(kind, a, b);
        sum += bracketGen(kind, b, a);
        if (!sum.isZero())
          return failWith(r, "[" + a.str() + "," + b.str() + "] + [" + b.str() +
                                 "," + a.str() + "] != 0");
      }
    }
  }
  return r;
}

CheckResult checkJacobi(int maxMode) {
  CheckResult r{"Jacobi identity", true, 0, ""};
  const std::vector<GeneratorId> gens = modalGenerators(maxMode);
  for (AlgebraKind kind : {AlgebraKind::Centerless, AlgebraKind::Central}) {
    for (const GeneratorId a : gens) {
      const LieElement ea = LieElement::term(a, Rational(1));
      for (const GeneratorId b : gens) {
        const LieElement eb = LieElement::term(b, Rational(1));
        for (const GeneratorId c : gens) {
          const LieElement ec = LieElement::term(c, Rational(1));
          ++r.cases;
          LieElement sum = bracketElem(kind, ea, bracketGen(kind, b, c));
          sum += bracketElem(kind, eb, bracketGen(kind, c, a));
          sum += bracketElem(kind, ec, bracketGen(kind, a, b));
          if (!sum.isZero())
            return failWith(r, "triple (" + a.str() + "," + b.str() + "," +
                                   c.str() + ")");
        }
      }
    }
  }
  return r;
}

CheckResult checkBracketGrading(int maxMode) {
  CheckResult r{"bracket grading", true, 0, ""};
  const std::vector<GeneratorId> gens = modalGenerators(maxMode);
  for (AlgebraKind kind : {AlgebraKind::Centerless, AlgebraKind::Central}) {
    for (const GeneratorId a : gens) {
      for (const GeneratorId b : gens) {
        ++r.cases;
        const int expected = a.mode() + b.mode();
        const LieElement br = bracketGen(kind, a, b);
        for (const auto& [g, coeff] : br.terms()) {
          (void)coeff;
          if (g.isCentral()) {
            if (expected != 0)
              return failWith(r, "central term off the zero-mode line in [" +
                                     a.str() + "," + b.str() + "]");
          } else if (g.mode() != expected) {
            return failWith(r, "term " + g.str() + " in [" + a.str() + "," +
                                   b.str() + "]");
          }
        }
      }
    }
  }
  return r;
}

CheckResult checkPhiConsistency(int maxTotalMode) {
  CheckResult r{"homomorphism kills positive brackets", true, 0, ""};
  const WhittakerHom phi = suiteNonsingularHom();
  for (Family fa : {Family::L, Family::H, Family::I, Family::J}) {
    for (Family fb : {Family::L, Family::H, Family::I, Family::J}) {
      for (int n = 1; n < maxTotalMode; ++n) {
        for (int m = 1; n + m <= maxTotalMode; ++m) {
          ++r.cases;
          Rational acc(0);
          const LieElement br = bracketGen(AlgebraKind::Central,
                                           GeneratorId::modal(fa, n),
                                           GeneratorId::modal(fb, m));
          for (const auto& [g, coeff] : br.terms()) acc += coeff * phiEval(phi, g);
          if (acc != 0)
            return failWith(r, std::string(1, familyChar(fa)) + "[" +
                                   std::to_string(n) + "], " +
                                   std::string(1, familyChar(fb)) + "[" +
                                   std::to_string(m) + "]");
        }
      }
    }
  }
  return r;
}

CheckResult checkActLinearity(int samples, std::uint32_t seed) {
  CheckResult r{"action linearity", true, 0, ""};
  std::mt19937 rng(seed);
  const ModuleCtx ctx =
      ModuleCtx::make(ModuleKind::UniversalCentral, suiteNonsingularHom());
  const std::vector<PBWMonomial> monos = monomialsUpTo(3);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> mode(-3, 3);
  std::uniform_int_distribution<int> fam(0, 3);
  auto randomVec = [&]() {
    ModuleVector v;
    std::uniform_int_distribution<int> nterms(1, 3);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t)
      v.add(monos[pick(rng)], CentralPoly(randomRational(rng)));
    return v;
  };
  for (int t = 0; t < samples; ++t) {
    const ModuleVector v = randomVec(), w = randomVec();
    const Rational a = randomRational(rng), b = randomRational(rng);
    const GeneratorId g = GeneratorId::modal(static_cast<Family>(fam(rng)), mode(rng));
    ++r.cases;
    ModuleVector lhs = v;
    lhs *= a;
    ModuleVector bw = w;
    bw *= b;
    lhs += bw;
    lhs = actGen(ctx, g, lhs);
    ModuleVector rhs = actGen(ctx, g, v);
    rhs *= a;
    ModuleVector rhs2 = actGen(ctx, g, w);
    rhs2 *= b;
    rhs += rhs2;
    if (!(lhs == rhs)) return failWith(r, "generator " + g.str());
  }
  return r;
}

CheckResult checkLieModuleLaw(int maxMode, unsigned maxBudget) {
  CheckResult r{"Lie module law", true, 0, ""};
  const ModuleCtx ctx =
      ModuleCtx::make(ModuleKind::UniversalCentral, suiteNonsingularHom());
  const std::vector<GeneratorId> gens = modalGenerators(maxMode);
  const std::vector<PBWMonomial> monos = monomialsUpTo(maxBudget);
  for (const GeneratorId x : gens) {
    for (const GeneratorId y : gens) {
      const LieElement br = bracketGen(ctx.algebra(), x, y);
      for (const PBWMonomial& m : monos) {
        ++r.cases;
        const ModuleVector v = ModuleVector::term(m, Rational(1));
        ModuleVector lhs;
        for (const auto& [g, coeff] : br.terms()) {
          ModuleVector part = actGen(ctx, g, v);
          part *= coeff;
          lhs += part;
        }
        ModuleVector rhs = actGen(ctx, x, actGen(ctx, y, v));
        rhs -= actGen(ctx, y, actGen(ctx, x, v));
        if (!(lhs == rhs))
          return failWith(r, "[" + x.str() + "," + y.str() + "] on " + m.str());
      }
    }
  }
  return r;
}

CheckResult checkConfluence(int words, int maxLen, int maxAbsMode,
                            std::uint32_t seed) {
  CheckResult r{"straightening confluence", true, 0, ""};
  std::mt19937 rng(seed);
  const ModuleCtx ctx =
      ModuleCtx::make(ModuleKind::UniversalCentral, suiteNonsingularHom());
  std::uniform_int_distribution<int> len(1, maxLen);
  std::uniform_int_distribution<int> mode(-maxAbsMode, maxAbsMode);
  std::uniform_int_distribution<int> fam(0, 3);
  for (int t = 0; t < words; ++t) {
    Word w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k)
      w.push_back(GeneratorId::modal(static_cast<Family>(fam(rng)), mode(rng)));
    ++r.cases;
    const ModuleVector a = straightenWord(ctx, w, SwapStrategy::LeftmostFirst);
    const ModuleVector b = straightenWord(ctx, w, SwapStrategy::RightmostFirst);
    if (a.str() != b.str()) {
      std::ostringstream os;
      for (const GeneratorId& g : w) os << g.str() << ' ';
      return failWith(r, "word " + os.str());
    }
  }
  return r;
}

CheckResult checkClosedFormGrid(int maxK, int maxA) {
  CheckResult r{"closed-form commutators", true, 0, ""};
  for (int k = 0; k <= maxK; ++k) {
    for (int a = 1; a <= maxA; ++a) {
      for (Family family : {Family::I, Family::J}) {
        for (Family target : {Family::L, Family::H}) {
          ++r.cases;
          if (!closedFormCheck(k, a, family, target)) {
            return failWith(r, "k=" + std::to_string(k) + " a=" + std::to_string(a) +
                                   " family=" + familyChar(family) +
                                   " target=" + familyChar(target));
          }
        }
      }
    }
  }
  return r;
}

CheckResult checkDegreeDrop(int maxN, unsigned maxBudget) {
  CheckResult r{"commutator degree drop", true, 0, ""};
  const ModuleCtx ctx =
      ModuleCtx::make(ModuleKind::UniversalCenterless, suiteNonsingularHom());
  const std::vector<PBWMonomial> monos = monomialsUpTo(maxBudget);
  for (Family f : {Family::I, Family::J}) {
    for (int n = 1; n <= maxN; ++n) {
      for (const PBWMonomial& m : monos) {
        ++r.cases;
        const ModuleVector sv =
            starAct(ctx, GeneratorId::modal(f, n), ModuleVector::term(m, Rational(1)));
        const auto deg = sv.maxdeg();
        if (deg && *deg > m.weight() - n + 1)
          return failWith(r, std::string(1, familyChar(f)) + "[" +
                                 std::to_string(n) + "] on " + m.str());
      }
    }
  }
  return r;
}

CheckResult checkStarMonotonic(unsigned maxBudget, int maxGenMode) {
  CheckResult r{"star action functional non-increase", true, 0, ""};
  const ModuleCtx ctx =
      ModuleCtx::make(ModuleKind::UniversalCentral, suiteNonsingularHom());
  const std::vector<PBWMonomial> monos = monomialsUpTo(maxBudget);
  for (const PBWMonomial& m : monos) {
    const long before = truncFunctional(m, 0);
    for (Family f : {Family::L, Family::H, Family::I, Family::J}) {
      for (int n = 1; n <= maxGenMode; ++n) {
        ++r.cases;
        const ModuleVector sv =
            starAct(ctx, GeneratorId::modal(f, n), ModuleVector::term(m, Rational(1)));
        for (const auto& [mono, poly] : sv.terms()) {
          for (const auto& [alpha, coeff] : poly.terms()) {
            (void)coeff;
            const long after =
                truncFunctional(mono, int(alpha[0] + alpha[1] + alpha[2]));
            if (after > before)
              return failWith(r, std::string(1, familyChar(f)) + "[" +
                                     std::to_string(n) + "] on " + m.str());
          }
        }
      }
    }
  }
  return r;
}

CheckResult checkStarVanishing(unsigned maxBudget, int extraModes) {
  CheckResult r{"star action vanishing beyond weight + 2", true, 0, ""};
  const ModuleCtx ctx =
      ModuleCtx::make(ModuleKind::UniversalCentral, suiteNonsingularHom());
  const std::vector<PBWMonomial> monos = monomialsUpTo(maxBudget);
  for (const PBWMonomial& m : monos) {
    const long w = m.weight();
    for (Family f : {Family::L, Family::H, Family::I, Family::J}) {
      for (long n = w + 3; n <= w + 2 + extraModes; ++n) {
        ++r.cases;
        const ModuleVector sv = starAct(ctx, GeneratorId::modal(f, int(n)),
                                        ModuleVector::term(m, Rational(1)));
        if (!sv.isZero())
          return failWith(r, std::string(1, familyChar(f)) + "[" +
                                 std::to_string(n) + "] on " + m.str());
      }
    }
  }
  return r;
}

CheckResult checkWindowClosure(unsigned maxBound) {
  CheckResult r{"window closure under the five generators", true, 0, ""};
  // Per-term functional non-increase at the largest bound gives closure of
  // every window up to it in one pass.
  for (const auto& [name, ctx] : suiteContexts()) {
    const LabelIndex index(enumerateWindow(ctx, Window{maxBound}));
    for (const BasisLabel& label : index.labels()) {
      const long before = truncFunctional(label.mono, int(label.alphaDegree()));
      for (const GeneratorId e : positiveGenerators()) {
        ++r.cases;
        const ModuleVector sv = starAct(ctx, e, label.vec());
        if (!index.tryCoords(sv))
          return failWith(r, name + ": " + e.str() + " leaves the window");
        for (const auto& [mono, poly] : sv.terms()) {
          for (const auto& [alpha, coeff] : poly.terms()) {
            (void)coeff;
            if (truncFunctional(mono, int(alpha[0] + alpha[1] + alpha[2])) > before)
              return failWith(r, name + ": functional grew under " + e.str());
          }
        }
      }
    }
  }
  return r;
}

CheckResult checkSubmoduleClosure(unsigned maxBudget, int maxMode) {
  CheckResult r{"killed spans closed under the parent action", true, 0, ""};
  const std::vector<GeneratorId> gens = modalGenerators(maxMode);
  for (const auto& [name, ctx] : suiteContexts()) {
    if (!ctx.isQuotient()) continue;
    const ModuleCtx parent = parentCtx(ctx);
    std::vector<ModuleVector> span;
    forEachMonomial(maxBudget, [&](const PBWMonomial& m) {
      if (submoduleMembership(ctx.kind(), m))
        span.push_back(ModuleVector::term(m, Rational(1)));
    });
    if (ctx.kind() == ModuleKind::QuotientOmegaTilde) {
      // The killed span also contains (H[0] - c) m for every H/L monomial.
      forEachMonomial(maxBudget - 1, [&](const PBWMonomial& m) {
        if (m.i.length() + m.j.length() > 0) return;
        PBWMonomial shifted = m;
        shifted.h.addPart(0);
        ModuleVector v = ModuleVector::term(shifted, Rational(1));
        v.add(m, CentralPoly(-ctx.c()));
        span.push_back(std::move(v));
      });
    }
    for (const ModuleVector& s : span) {
      for (const GeneratorId g : gens) {
        ++r.cases;
        if (!quotientReduce(ctx, actGen(parent, g, s)).isZero())
          return failWith(r, name + ": escape under " + g.str());
      }
    }
  }
  return r;
}

CheckResult checkProperness() {
  CheckResult r{"cyclic vector survives every quotient", true, 0, ""};
  for (const auto& [name, ctx] : suiteContexts()) {
    if (!ctx.isQuotient()) continue;
    ++r.cases;
    if (submoduleMembership(ctx.kind(), PBWMonomial{}))
      return failWith(r, name + ": unit monomial in killed span");
    if (quotientReduce(ctx, ModuleVector::unit()).isZero())
      return failWith(r, name + ": cyclic vector reduced to zero");
  }
  return r;
}

CheckResult checkQuotientCompat(int samples, std::uint32_t seed) {
  CheckResult r{"quotient action well defined", true, 0, ""};
  std::mt19937 rng(seed);
  std::vector<NamedCtx> quotients;
  for (auto& nc : suiteContexts())
    if (nc.ctx.isQuotient()) quotients.push_back(nc);
  const std::vector<PBWMonomial> monos = monomialsUpTo(3);
  std::uniform_int_distribution<std::size_t> pickMono(0, monos.size() - 1);
  std::uniform_int_distribution<std::size_t> pickCtx(0, quotients.size() - 1);
  std::uniform_int_distribution<int> mode(-3, 3);
  std::uniform_int_distribution<int> fam(0, 3);
  std::uniform_int_distribution<int> nterms(1, 4);
  for (int t = 0; t < samples; ++t) {
    const auto& [name, ctx] = quotients[pickCtx(rng)];
    const ModuleCtx parent = parentCtx(ctx);
    ModuleVector v;  // arbitrary parent vector, not necessarily reduced
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k)
      v.add(monos[pickMono(rng)], CentralPoly(randomRational(rng)));
    const GeneratorId g = GeneratorId::modal(static_cast<Family>(fam(rng)), mode(rng));
    ++r.cases;
    const ModuleVector lhs = quotientReduce(ctx, actGen(parent, g, v));
    const ModuleVector rhs = actGen(ctx, g, quotientReduce(ctx, v));
    if (!(lhs == rhs)) return failWith(r, name + ": " + g.str());
  }
  return r;
}

namespace {

Suite axiomsSuite() {
  return {
      checkCoeffRingAxioms(1000, 0xC0FFEE01),
      checkCoeffCanonicalIdempotence(200, 0xC0FFEE02),
      checkCoeffSubstituteHom(500, 0xC0FFEE03),
      checkBracketAntisymmetry(6),
      checkJacobi(4),
      checkBracketGrading(6),
      checkPhiConsistency(6),
      checkActLinearity(200, 0xC0FFEE04),
      checkLieModuleLaw(3, 3),
      checkConfluence(500, 6, 4, 0xC0FFEE05),
  };
}

Suite lemmasSuite() {
  return {
      checkClosedFormGrid(3, 5),
      checkDegreeDrop(4, 4),
  };
}

Suite boundsSuite() {
  return {
      checkStarMonotonic(5, 6),
      checkStarVanishing(5, 4),
  };
}

Suite closureSuite() {
  return {
      checkWindowClosure(5),
      checkSubmoduleClosure(4, 3),
      checkProperness(),
      checkQuotientCompat(300, 0xC0FFEE06),
  };
}

}  // namespace

Suite runSuite(const std::string& name) {
  if (name == "axioms") return axiomsSuite();
  if (name == "lemmas") return lemmasSuite();
  if (name == "bounds") return boundsSuite();
  if (name == "closure") return closureSuite();
  if (name == "all") {
    Suite all = axiomsSuite();
    for (Suite part : {lemmasSuite(), boundsSuite(), closureSuite()})
      all.insert(all.end(), part.begin(), part.end());
    return all;
  }
  throw ConfigError("unknown suite '" + name + "'");
}

std::vector<std::string> suiteNames() {
  return {"axioms", "lemmas", "bounds", "closure", "all"};
}

bool suitePassed(const Suite& suite) {
  return std::all_of(suite.begin(), suite.end(),
                     [](const CheckResult& c) { return c.pass; });
}

}  // namespace gca
