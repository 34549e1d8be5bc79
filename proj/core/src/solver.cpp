#include "gca/solver.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "gca/errors.hpp"

namespace gca {

std::vector<GeneratorId> positiveGenerators() {
  return {GeneratorId::modal(Family::L, 1), GeneratorId::modal(Family::L, 2),
          GeneratorId::modal(Family::H, 1), GeneratorId::modal(Family::I, 1),
          GeneratorId::modal(Family::J, 1)};
}

namespace {

// (E - psi(E)) v. This is the star action when psi is the context's own
// homomorphism; for other psi it differs by a scalar shift and still
// preserves every window.
ModuleVector shiftedAct(const ModuleCtx& ctx, GeneratorId e,
                        const WhittakerHom& psi, const ModuleVector& v) {
  ModuleVector out = actGen(ctx, e, v);
  ModuleVector shift = quotientReduce(ctx, v);
  shift *= phiEval(psi, e);
  out -= shift;
  return out;
}

// Assembly order chosen so the first intersections cut the space down
// fastest; the final basis is canonicalized, so the order does not affect
// the report.
std::vector<GeneratorId> assemblyOrder() {
  return {GeneratorId::modal(Family::I, 1), GeneratorId::modal(Family::H, 1),
          GeneratorId::modal(Family::L, 1), GeneratorId::modal(Family::J, 1),
          GeneratorId::modal(Family::L, 2)};
}

}  // namespace

LabelIndex::LabelIndex(std::vector<BasisLabel> labels)
    : labels_(std::move(labels)) {
  for (int k = 0; k < static_cast<int>(labels_.size()); ++k)
    index_.emplace(labels_[static_cast<std::size_t>(k)], k);
}

std::optional<SparseVec> LabelIndex::tryCoords(const ModuleVector& v) const {
  SparseVec out;
  for (const auto& [mono, poly] : v.terms()) {
    for (const auto& [alpha, coeff] : poly.terms()) {
      auto it = index_.find(BasisLabel{mono, alpha});
      if (it == index_.end()) return std::nullopt;
      out.entries.emplace_back(it->second, coeff);
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseVec LabelIndex::coords(const ModuleVector& v) const {
  auto out = tryCoords(v);
  if (!out) throw EngineError("vector term escapes the window");
  return std::move(*out);
}

ModuleVector LabelIndex::vec(const SparseVec& coords) const {
  ModuleVector v;
  for (const auto& [idx, value] : coords.entries) {
    const BasisLabel& label = labels_[static_cast<std::size_t>(idx)];
    v.add(label.mono, CentralPoly::monomial(label.alpha, value));
  }
  return v;
}

SolveReport whittakerSolve(const ModuleCtx& ctx, Window w,
                           const WhittakerHom& psi) {
  SolveReport report;
  report.ctx = ctx;
  report.bound = w.bound;
  report.type = psi;

  const LabelIndex index(enumerateWindow(ctx, w));

  // Solution space, intersected one operator at a time. Coordinates are
  // over the window labels throughout.
  std::vector<SparseVec> solution;
  bool first = true;
  for (const GeneratorId e : assemblyOrder()) {
    std::vector<SparseVec> columns;
    if (first) {
      columns.reserve(index.size());
      for (const BasisLabel& label : index.labels())
        columns.push_back(index.coords(shiftedAct(ctx, e, psi, label.vec())));
    } else {
      columns.reserve(solution.size());
      for (const SparseVec& s : solution)
        columns.push_back(index.coords(shiftedAct(ctx, e, psi, index.vec(s))));
    }
    const int dimIn = first ? static_cast<int>(index.size())
                            : static_cast<int>(solution.size());
    std::vector<SparseVec> kernel = kernelBasis(columns, dimIn);
    if (first) {
      solution = std::move(kernel);
      first = false;
    } else {
      std::vector<SparseVec> combined;
      combined.reserve(kernel.size());
      for (const SparseVec& kv : kernel) {
        // Combination of the previous solution vectors.
        std::map<int, Rational> acc;
        for (const auto& [j, c] : kv.entries) {
          for (const auto& [idx, val] : solution[static_cast<std::size_t>(j)].entries) {
            Rational& slot = acc[idx];
            slot += c * val;
          }
        }
        SparseVec sv;
        for (auto& [idx, val] : acc)
          if (val != 0) sv.entries.emplace_back(idx, std::move(val));
        combined.push_back(std::move(sv));
      }
      solution = std::move(combined);
    }
    if (solution.empty()) break;
  }

  // Canonical reduced basis of the final space.
  for (const SparseVec& row : rrefRows(solution)) {
    report.basis.push_back(index.vec(row));
  }
  report.verified = true;
  for (const ModuleVector& v : report.basis) {
    if (!verifyVector(ctx, v, psi)) {
      report.verified = false;
      break;
    }
  }
  return report;
}

bool verifyVector(const ModuleCtx& ctx, const ModuleVector& v,
                  const WhittakerHom& psi) {
  for (const GeneratorId e : positiveGenerators()) {
    if (!shiftedAct(ctx, e, psi, v).isZero()) return false;
  }
  return true;
}

ProbeResult reducibilityProbe(const ModuleCtx& ctx, Window w) {
  ProbeResult result;
  result.bound = w.bound;
  const SolveReport report = whittakerSolve(ctx, w, ctx.phi());
  for (const ModuleVector& v : report.basis) {
    const bool trivial =
        std::all_of(v.terms().begin(), v.terms().end(),
                    [](const auto& term) { return term.first.isUnit(); });
    if (!trivial) {
      result.witness = v;
      break;
    }
  }
  return result;
}

namespace {

// Fixed generic nonsingular homomorphism for the closed-form probes.
const WhittakerHom kProbeHom{makeRational(2), makeRational(-3),
                             makeRational(5, 2), makeRational(7),
                             makeRational(-4)};

ModuleVector applyScaledWords(
    const ModuleCtx& ctx,
    const std::vector<std::pair<Rational, Word>>& words,
    const ModuleVector& v) {
  ModuleVector acc;
  for (const auto& [coeff, word] : words) {
    ModuleVector part = applyWord(ctx, word, v);
    part *= coeff;
    acc += part;
  }
  return acc;
}

}  // namespace

bool closedFormCheck(int k, int a, Family family, Family target) {
  if (family != Family::I && family != Family::J)
    throw DomainError("closed form expects family I or J");
  if (target != Family::L && target != Family::H)
    throw DomainError("closed form expects target L or H");
  if (k < 0 || a < 0) throw DomainError("closed form expects k >= 0, a >= 0");
  if (a == 0) return true;

  const ModuleCtx ctx = ModuleCtx::make(ModuleKind::UniversalCenterless, kProbeHom);
  const GeneratorId e = GeneratorId::modal(family, k + 1);
  const GeneratorId x = GeneratorId::modal(target, -k);

  // Brute force: [E, X^a] = sum_s X^s [E, X] X^{a-s-1}.
  const LieElement single = bracketGen(ctx.algebra(), e, x);
  std::vector<std::pair<Rational, Word>> lhs;
  for (int s = 0; s < a; ++s) {
    for (const auto& [g, c] : single.terms()) {
      Word word;
      word.insert(word.end(), static_cast<std::size_t>(s), x);
      word.push_back(g);
      word.insert(word.end(), static_cast<std::size_t>(a - s - 1), x);
      lhs.emplace_back(c, std::move(word));
    }
  }

  // Closed form.
  std::vector<std::pair<Rational, Word>> rhs;
  for (int s = 1; s <= a; ++s) {
    Rational coeff(binomial(static_cast<unsigned long>(a),
                            static_cast<unsigned long>(s)));
    if (target == Family::L) {
      for (int t = 0; t < s; ++t) coeff *= Rational(long(t) * k - 2L * k - 1);
    } else if (family == Family::I) {
      if (s % 2 != 0) coeff = -coeff;
    }
    Word word;
    word.insert(word.end(), static_cast<std::size_t>(a - s), x);
    word.push_back(GeneratorId::modal(family, 1 + k - s * k));
    rhs.emplace_back(std::move(coeff), std::move(word));
  }

  const std::vector<ModuleVector> probes = {
      ModuleVector::unit(),
      ModuleVector::term(PBWMonomial{{}, {}, Partition::fromParts({unsigned(k + 1)}), {}},
                         Rational(1)),
      ModuleVector::term(PBWMonomial{{}, {}, {}, Partition::fromParts({unsigned(k + 1)})},
                         Rational(1)),
  };
  for (const ModuleVector& probe : probes) {
    if (!(applyScaledWords(ctx, lhs, probe) == applyScaledWords(ctx, rhs, probe)))
      return false;
  }
  return true;
}

TypeScanReport typeScan(const ModuleCtx& ctx, Window w,
                        const std::vector<WhittakerHom>& candidates) {
  TypeScanReport report;
  for (const WhittakerHom& psi : candidates) {
    TypeScanEntry entry;
    entry.psi = psi;
    entry.matchesPhi = psi == ctx.phi();
    entry.dimension = whittakerSolve(ctx, w, psi).dimension();
    entry.pass = entry.matchesPhi ? entry.dimension > 0 : entry.dimension == 0;
    report.allPass = report.allPass && entry.pass;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<WhittakerHom> defaultTypePerturbations(const WhittakerHom& phi) {
  std::vector<WhittakerHom> out;
  for (int coord = 0; coord < 5; ++coord) {
    for (int delta : {1, -1}) {
      WhittakerHom psi = phi;
      Rational* slot = nullptr;
      switch (coord) {
        case 0: slot = &psi.l1; break;
        case 1: slot = &psi.l2; break;
        case 2: slot = &psi.h1; break;
        case 3: slot = &psi.i1; break;
        case 4: slot = &psi.j1; break;
      }
      *slot += delta;
      out.push_back(psi);
    }
  }
  return out;
}

}  // namespace gca
