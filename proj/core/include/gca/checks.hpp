#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gca/solver.hpp"

namespace gca {

// One machine-verified statement. `cases` counts the individual instances
// checked; on failure `detail` carries the first counterexample.
struct CheckResult {
  std::string name;
  bool pass = false;
  long cases = 0;
  std::string detail;
};

using Suite = std::vector<CheckResult>;

// The homomorphisms the fixed suites run with.
WhittakerHom suiteNonsingularHom();          // (1, -1, 2, 3, 5)
WhittakerHom suiteSingularBothHom();         // I1 = J1 = 0
WhittakerHom suiteSingularGammaHom();        // I1 = 0, J1 = 5
WhittakerHom suiteSingularUpsilonHom();      // I1 = 3, J1 = 0
Xi suiteXi();                                // (1, 0, 2)

// -- coefficient ring ------------------------------------------------------
CheckResult checkCoeffRingAxioms(int samples, std::uint32_t seed);
CheckResult checkCoeffCanonicalIdempotence(int samples, std::uint32_t seed);
CheckResult checkCoeffSubstituteHom(int samples, std::uint32_t seed);

// -- bracket table ---------------------------------------------------------
CheckResult checkBracketAntisymmetry(int maxMode);
CheckResult checkJacobi(int maxMode);
CheckResult checkBracketGrading(int maxMode);
CheckResult checkPhiConsistency(int maxTotalMode);

// -- action engine ---------------------------------------------------------
CheckResult checkActLinearity(int samples, std::uint32_t seed);
CheckResult checkLieModuleLaw(int maxMode, unsigned maxBudget);
CheckResult checkConfluence(int words, int maxLen, int maxAbsMode,
                            std::uint32_t seed);

// -- commutator lemmas -----------------------------------------------------
CheckResult checkClosedFormGrid(int maxK, int maxA);
CheckResult checkDegreeDrop(int maxN, unsigned maxBudget);

// -- star-action bounds ----------------------------------------------------
CheckResult checkStarMonotonic(unsigned maxBudget, int maxGenMode);
CheckResult checkStarVanishing(unsigned maxBudget, int extraModes);

// -- modules and windows ---------------------------------------------------
CheckResult checkWindowClosure(unsigned maxBound);
CheckResult checkSubmoduleClosure(unsigned maxBudget, int maxMode);
CheckResult checkProperness();
CheckResult checkQuotientCompat(int samples, std::uint32_t seed);

// Named suites for the command-line verifier. "all" is the union.
Suite runSuite(const std::string& name);
std::vector<std::string> suiteNames();

bool suitePassed(const Suite& suite);

}  // namespace gca
