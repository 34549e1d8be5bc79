// Acceptance suite: each criterion prints exactly one PASS/FAIL line.
// All checks are exact (tolerance zero); the only numeric limits are the
// per-criterion wall-clock budgets, which are part of the criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "gca/checks.hpp"
#include "gca/solver.hpp"

using namespace gca;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double timeLimitSeconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (timeLimitSeconds > 0 && elapsed > timeLimitSeconds) {
    ok = false;
    detail += detail.empty() ? "" : "; ";
    detail += "time limit exceeded";
  }
  if (!ok) ++failures;
  std::printf("%s  criterion %d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), elapsed, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
}

const WhittakerHom kPhi{makeRational(1), makeRational(-1), makeRational(2),
                        makeRational(3), makeRational(5)};
const Xi kXi{makeRational(1), makeRational(0), makeRational(2)};

WhittakerHom withIJ(const Rational& i1, const Rational& j1) {
  WhittakerHom phi = kPhi;
  phi.i1 = i1;
  phi.j1 = j1;
  return phi;
}

bool checkOk(const CheckResult& r, std::string& detail) {
  if (!r.pass) detail += r.name + ": " + r.detail;
  return r.pass;
}

}  // namespace

int main() {
  criterion(1, "bracket antisymmetry (|m| <= 6) and Jacobi (|m| <= 4), both kinds",
            30.0, [](std::string& detail) {
              return checkOk(checkBracketAntisymmetry(6), detail) &&
                     checkOk(checkJacobi(4), detail);
            });

  criterion(2, "closed-form commutators vs brute force, k <= 3, a <= 5, 80 cases",
            60.0, [](std::string& detail) {
              const CheckResult r = checkClosedFormGrid(3, 5);
              if (r.cases != 80) {
                detail = "expected 80 cases, ran " + std::to_string(r.cases);
                return false;
              }
              return checkOk(r, detail);
            });

  criterion(3, "star-action functional non-increase and vanishing, weight window 5",
            0.0, [](std::string& detail) {
              return checkOk(checkStarMonotonic(5, 6), detail) &&
                     checkOk(checkStarVanishing(5, 4), detail);
            });

  criterion(4, "nonsingular classification at bounds 1..4", 300.0,
            [](std::string& detail) {
              const ModuleCtx generic =
                  ModuleCtx::make(ModuleKind::Generic, kPhi, kXi);
              const ModuleCtx centerless =
                  ModuleCtx::make(ModuleKind::UniversalCenterless, kPhi);
              const ModuleCtx central =
                  ModuleCtx::make(ModuleKind::UniversalCentral, kPhi);
              const std::size_t centralDims[] = {4, 10, 20, 35};  // C(B+3, 3)
              for (unsigned bound = 1; bound <= 4; ++bound) {
                const SolveReport g = whittakerSolve(generic, Window{bound}, kPhi);
                if (g.dimension() != 1 || !g.verified) {
                  detail = "generic bound " + std::to_string(bound) + ": dim " +
                           std::to_string(g.dimension());
                  return false;
                }
                const SolveReport m = whittakerSolve(centerless, Window{bound}, kPhi);
                if (m.dimension() != 1 || !m.verified) {
                  detail = "universal-centerless bound " + std::to_string(bound) +
                           ": dim " + std::to_string(m.dimension());
                  return false;
                }
                const SolveReport t = whittakerSolve(central, Window{bound}, kPhi);
                if (t.dimension() != centralDims[bound - 1] || !t.verified) {
                  detail = "universal-central bound " + std::to_string(bound) +
                           ": dim " + std::to_string(t.dimension()) + ", want " +
                           std::to_string(centralDims[bound - 1]);
                  return false;
                }
              }
              return true;
            });

  criterion(5, "type uniqueness under the ten-candidate perturbation scan, bound 3",
            0.0, [](std::string& detail) {
              const std::vector<WhittakerHom> candidates =
                  defaultTypePerturbations(kPhi);
              for (const auto& [name, ctx] :
                   std::initializer_list<std::pair<const char*, ModuleCtx>>{
                       {"universal-centerless",
                        ModuleCtx::make(ModuleKind::UniversalCenterless, kPhi)},
                       {"universal-central",
                        ModuleCtx::make(ModuleKind::UniversalCentral, kPhi)},
                       {"generic", ModuleCtx::make(ModuleKind::Generic, kPhi, kXi)}}) {
                const TypeScanReport scan = typeScan(ctx, Window{3}, candidates);
                for (const TypeScanEntry& entry : scan.entries) {
                  if (entry.matchesPhi || entry.pass) continue;
                  detail = std::string(name) + ": spurious dimension " +
                           std::to_string(entry.dimension);
                  return false;
                }
              }
              return true;
            });

  criterion(6, "singular patterns give verified reducibility witnesses at bound 2",
            0.0, [](std::string& detail) {
              const WhittakerHom patterns[] = {
                  withIJ(makeRational(0), makeRational(0)),
                  withIJ(makeRational(0), makeRational(5)),
                  withIJ(makeRational(3), makeRational(0)),
              };
              for (const WhittakerHom& phi : patterns) {
                for (ModuleKind kind :
                     {ModuleKind::UniversalCenterless, ModuleKind::Generic}) {
                  const ModuleCtx ctx =
                      kind == ModuleKind::Generic
                          ? ModuleCtx::make(kind, phi, kXi)
                          : ModuleCtx::make(kind, phi);
                  const ProbeResult probe = reducibilityProbe(ctx, Window{2});
                  if (!probe.witness) {
                    detail = kindName(kind) + ": no witness";
                    return false;
                  }
                  if (!verifyVector(ctx, *probe.witness, phi)) {
                    detail = kindName(kind) + ": witness fails the engine check";
                    return false;
                  }
                  // The hand-checked witnesses: I[0] w when phi(I1) = 0,
                  // J[0] w when phi(J1) = 0.
                  PBWMonomial expected;
                  if (phi.i1 == 0)
                    expected.i = Partition::fromParts({0});
                  else
                    expected.j = Partition::fromParts({0});
                  if (!verifyVector(ctx, ModuleVector::term(expected, Rational(1)),
                                    phi)) {
                    detail = kindName(kind) + ": expected zero-mode witness fails";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(7, "central quotient simplicity condition at xi3 = 0, c = xi2",
            0.0, [](std::string& detail) {
              const Xi xi{makeRational(1), makeRational(3), makeRational(0)};
              const Rational c = makeRational(3);  // = xi2
              WhittakerHom phi = withIJ(makeRational(0), makeRational(0));
              phi.h1 = makeRational(0);
              const ModuleCtx reducible =
                  ModuleCtx::make(ModuleKind::QuotientOmegaTilde, phi, xi, c);
              const ProbeResult probe = reducibilityProbe(reducible, Window{2});
              if (!probe.witness) {
                detail = "phi(H1) = 0: no witness at bound 2";
                return false;
              }
              PBWMonomial hm1;
              hm1.h = Partition::fromParts({1});
              if (!verifyVector(reducible, ModuleVector::term(hm1, Rational(1)), phi)) {
                detail = "phi(H1) = 0: H[-1] w is not a Whittaker vector";
                return false;
              }
              phi.h1 = makeRational(1);
              const ModuleCtx simple =
                  ModuleCtx::make(ModuleKind::QuotientOmegaTilde, phi, xi, c);
              for (unsigned bound = 1; bound <= 4; ++bound) {
                const ProbeResult none = reducibilityProbe(simple, Window{bound});
                if (none.witness) {
                  detail = "phi(H1) = 1: unexpected witness at bound " +
                           std::to_string(bound);
                  return false;
                }
              }
              return true;  // simplicity evidence only, at these bounds
            });

  criterion(8, "killed spans closed under all |m| <= 3 actions, weight window 4",
            0.0, [](std::string& detail) {
              return checkOk(checkSubmoduleClosure(4, 3), detail) &&
                     checkOk(checkProperness(), detail);
            });

  criterion(9, "straightening confluence on 500 random words", 0.0,
            [](std::string& detail) {
              const CheckResult r = checkConfluence(500, 6, 4, 0xACCE55);
              if (r.cases != 500) {
                detail = "expected 500 words, ran " + std::to_string(r.cases);
                return false;
              }
              return checkOk(r, detail);
            });

  if (failures == 0) std::printf("all criteria passed\n");
  return failures;
}
