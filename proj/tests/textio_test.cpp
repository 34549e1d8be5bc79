#include <doctest.h>

#include <random>

#include "gca/action.hpp"
#include "gca/config.hpp"
#include "gca/errors.hpp"
#include "gca/parse.hpp"
#include "gca/report_json.hpp"
#include "gca/solver.hpp"

using namespace gca;

namespace {
const WhittakerHom kPhi{makeRational(1), makeRational(-1), makeRational(2),
                        makeRational(3), makeRational(5)};
}

TEST_CASE("generator text round trip") {
  for (const char* text : {"L[-3]", "H[0]", "I[2]", "J[-1]", "C1", "C3"}) {
    CHECK(parseGenerator(text).str() == text);
  }
  CHECK_THROWS_AS(parseGenerator("K[1]"), ParseError);
  CHECK_THROWS_AS(parseGenerator("L[1"), ParseError);
  CHECK_THROWS_AS(parseGenerator("C4"), ParseError);
  CHECK_THROWS_AS(parseGenerator("L[1]x"), ParseError);
}

TEST_CASE("lie element text round trip") {
  LieElement e = LieElement::term(GeneratorId::modal(Family::L, 0), Rational(-2));
  e.add(GeneratorId::central(1), Rational(1));
  CHECK(e.str() == "-2*L[0] + 1*C1");
  CHECK(parseLieElement(e.str()) == e);
  CHECK(parseLieElement("0").isZero());
  CHECK(parseLieElement("0").str() == "0");
  CHECK(parseLieElement("1/2*H[-4] + -3*J[2]").str() == "1/2*H[-4] + -3*J[2]");
}

TEST_CASE("monomial text round trip") {
  PBWMonomial m;
  m.j = Partition::fromParts({2});
  m.i = Partition::fromParts({0, 0});
  m.h = Partition::fromParts({1, 1, 1});
  m.l = Partition::fromParts({0});
  CHECK(parseMonomial(m.str()) == m);
  CHECK(parseMonomial("1").isUnit());
  CHECK_THROWS_AS(parseMonomial("L[2]^1"), ParseError);  // positive mode
  CHECK_THROWS_AS(parseMonomial("L[-1]^0"), ParseError);
}

TEST_CASE("central polynomial text round trip") {
  const CentralPoly p = CentralPoly::monomial({2, 0, 1}, makeRational(3, 2)) +
                        CentralPoly::monomial({0, 1, 0}, makeRational(-1));
  CHECK(parseCentralPoly(p.str()) == p);
  CHECK(parseCentralPoly("0").isZero());
  CHECK(parseCentralPoly("-7/3") == CentralPoly(makeRational(-7, 3)));
}

TEST_CASE("module vector text round trip") {
  SUBCASE("constant coefficients") {
    ModuleVector v = ModuleVector::term(PBWMonomial{}, makeRational(-9));
    CHECK(v.str() == "-9 * 1");
    CHECK(parseModuleVector(v.str()) == v);
  }
  SUBCASE("polynomial coefficients are parenthesized") {
    ModuleVector v = ModuleVector::term(PBWMonomial{}, CentralPoly::generator(3));
    PBWMonomial m;
    m.h = Partition::fromParts({1});
    v.add(m, CentralPoly(makeRational(2)));
    CHECK(v.str() == "(1*C3) * 1 + 2 * H[-1]^1");
    CHECK(parseModuleVector(v.str()) == v);
  }
  SUBCASE("zero vector") {
    CHECK(parseModuleVector("0").isZero());
    CHECK(ModuleVector().str() == "0");
  }
  SUBCASE("every straightened output re-parses") {
    const ModuleCtx ctx = ModuleCtx::make(ModuleKind::UniversalCentral, kPhi);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> mode(-3, 3);
    std::uniform_int_distribution<int> fam(0, 3);
    std::uniform_int_distribution<int> len(1, 5);
    for (int t = 0; t < 100; ++t) {
      Word w;
      const int n = len(rng);
      for (int k = 0; k < n; ++k)
        w.push_back(GeneratorId::modal(static_cast<Family>(fam(rng)), mode(rng)));
      const ModuleVector v = actWord(ctx, w);
      CHECK(parseModuleVector(v.str()) == v);
    }
  }
}

TEST_CASE("run configuration parsing") {
  const std::string good = R"({
    "context": {
      "kind": "generic",
      "phi": {"L1": "1", "L2": "-1", "H1": "2", "I1": "3", "J1": "5"},
      "xi": ["1", "0", "2"]
    },
    "bound": 3
  })";
  const RunConfig config = parseRunConfig(good);
  CHECK(config.ctx.kind() == ModuleKind::Generic);
  CHECK(config.ctx.phi() == kPhi);
  CHECK(config.bound == 3u);
  CHECK_FALSE(config.psi.has_value());

  SUBCASE("echo is canonical and stable") {
    const std::string echo = runConfigEcho(config);
    const RunConfig again = parseRunConfig(echo);
    CHECK(runConfigEcho(again) == echo);
  }
  SUBCASE("unknown keys are rejected") {
    CHECK_THROWS_AS(parseRunConfig(R"({"context": {"kind": "generic"}, "extra": 1})"),
                    ConfigError);
    CHECK_THROWS_AS(parseRunConfig(R"({
      "context": {"kind": "universal-central",
                  "phi": {"L1": "1", "L2": "-1", "H1": "2", "I1": "3", "J1": "5"},
                  "zz": 0}})"),
                    ConfigError);
    CHECK_THROWS_AS(parseRunConfig(R"({
      "context": {"kind": "universal-central",
                  "phi": {"L1": "1", "L2": "-1", "H1": "2", "I1": "3", "J1": "5",
                          "X9": "0"}}})"),
                    ConfigError);
  }
  SUBCASE("rationals must be strings") {
    CHECK_THROWS_AS(parseRunConfig(R"({
      "context": {"kind": "universal-central",
                  "phi": {"L1": 1, "L2": "-1", "H1": "2", "I1": "3", "J1": "5"}}})"),
                    ConfigError);
  }
  SUBCASE("kind and parameter validation surfaces as ConfigError") {
    CHECK_THROWS_AS(parseRunConfig(R"({
      "context": {"kind": "nope",
                  "phi": {"L1": "1", "L2": "-1", "H1": "2", "I1": "3", "J1": "5"}}})"),
                    ConfigError);
    CHECK_THROWS_AS(parseRunConfig(R"({
      "context": {"kind": "generic",
                  "phi": {"L1": "1", "L2": "-1", "H1": "2", "I1": "3", "J1": "5"}}})"),
                    ConfigError);  // missing xi
  }
}

TEST_CASE("report JSON is deterministic") {
  const ModuleCtx ctx = ModuleCtx::make(ModuleKind::Generic, kPhi,
                                        Xi{makeRational(1), makeRational(0),
                                           makeRational(2)});
  const SolveReport a = whittakerSolve(ctx, Window{2}, kPhi);
  const SolveReport b = whittakerSolve(ctx, Window{2}, kPhi);
  CHECK(solveReportToJson(a) == solveReportToJson(b));
  CHECK(solveReportToJson(a).find("\"dimension\": 1") != std::string::npos);
  const ProbeResult probe = reducibilityProbe(ctx, Window{2});
  CHECK(probeToJson(ctx, probe).find("no-witness-at-bound") != std::string::npos);
}
