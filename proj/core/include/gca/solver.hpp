#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gca/action.hpp"
#include "gca/nullspace.hpp"

namespace gca {

// The five generators of the positive part; the equations (E - psi(E))v = 0
// for these imply all of them, since psi vanishes on brackets.
std::vector<GeneratorId> positiveGenerators();

// Result of an exact Whittaker-vector solve on a window.
struct SolveReport {
  ModuleCtx ctx;
  unsigned bound = 0;
  WhittakerHom type;
  // Canonical reduced basis of the solution space, ordered by leading
  // window label.
  std::vector<ModuleVector> basis;
  // Every basis vector re-checked through the action engine.
  bool verified = false;

  std::size_t dimension() const { return basis.size(); }
};

// Basis of { v in the window : (E - psi(E)) v = 0 for the five generators },
// by intersecting the null spaces of the shifted action matrices with
// exact rational elimination. The window is invariant under each operator,
// so for psi equal to the context homomorphism the answer is exactly the
// set of all Whittaker vectors of the module with trunc functional <= bound.
SolveReport whittakerSolve(const ModuleCtx& ctx, Window w, const WhittakerHom& psi);

// True iff (E - psi(E)) v = 0 for the five generators, computed directly
// through the action engine, independent of the solver's matrices.
bool verifyVector(const ModuleCtx& ctx, const ModuleVector& v,
                  const WhittakerHom& psi);

// Reducibility probe: a Whittaker vector of the context's own type that is
// linearly independent from the cyclic vector (and, when the center is
// symbolic, from its polynomial multiples). Finding one proves the module
// reducible; finding none is evidence at this window only.
struct ProbeResult {
  unsigned bound = 0;
  std::optional<ModuleVector> witness;

  // Fixed verdict vocabulary; this probe never claims simplicity.
  std::string verdict() const {
    return witness ? "reducible-witness" : "no-witness-at-bound";
  }
};

ProbeResult reducibilityProbe(const ModuleCtx& ctx, Window w);

// Checks one closed-form commutator identity
//   [F_{k+1}, X_{-k}^a] = explicit sum
// (F in {I, J}, X in {L, H}) against the brute-force expansion
// sum_s X^s [F_{k+1}, X] X^{a-s-1}, both sides applied through the
// straightening engine to the probe vectors w, H[-(k+1)]w, L[-(k+1)]w under
// a fixed generic nonsingular homomorphism. a = 0 is vacuously true.
bool closedFormCheck(int k, int a, Family family, Family target);

struct TypeScanEntry {
  WhittakerHom psi;
  std::size_t dimension = 0;
  bool matchesPhi = false;
  // For psi != phi the dimension must be 0; for psi == phi it must not be.
  bool pass = false;
};

struct TypeScanReport {
  std::vector<TypeScanEntry> entries;
  bool allPass = true;
};

// Runs whittakerSolve for each candidate type.
TypeScanReport typeScan(const ModuleCtx& ctx, Window w,
                        const std::vector<WhittakerHom>& candidates);

// The default scan candidates: +1 and -1 perturbations of each of the five
// coordinates (10 candidates, all distinct from phi).
std::vector<WhittakerHom> defaultTypePerturbations(const WhittakerHom& phi);

// Coordinates over a fixed window basis, shared with the verification
// suites.
class LabelIndex {
 public:
  explicit LabelIndex(std::vector<BasisLabel> labels);

  // Throws EngineError when a term of v lies outside the window.
  SparseVec coords(const ModuleVector& v) const;
  // Nullopt instead of throwing.
  std::optional<SparseVec> tryCoords(const ModuleVector& v) const;
  ModuleVector vec(const SparseVec& coords) const;

  const std::vector<BasisLabel>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<BasisLabel> labels_;
  std::map<BasisLabel, int> index_;
};

}  // namespace gca
