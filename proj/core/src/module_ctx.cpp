#include "gca/module_ctx.hpp"

#include <algorithm>
#include <functional>

#include "gca/errors.hpp"

namespace gca {

std::string kindName(ModuleKind k) {
  switch (k) {
    case ModuleKind::UniversalCenterless: return "universal-centerless";
    case ModuleKind::UniversalCentral: return "universal-central";
    case ModuleKind::Generic: return "generic";
    case ModuleKind::QuotientOmega: return "quotient-omega";
    case ModuleKind::QuotientOmegaTilde: return "quotient-omega-tilde";
    case ModuleKind::QuotientGamma: return "quotient-gamma";
    case ModuleKind::QuotientUpsilon: return "quotient-upsilon";
  }
  return "?";
}

std::optional<ModuleKind> kindFromName(const std::string& name) {
  for (ModuleKind k :
       {ModuleKind::UniversalCenterless, ModuleKind::UniversalCentral,
        ModuleKind::Generic, ModuleKind::QuotientOmega,
        ModuleKind::QuotientOmegaTilde, ModuleKind::QuotientGamma,
        ModuleKind::QuotientUpsilon}) {
    if (kindName(k) == name) return k;
  }
  return std::nullopt;
}

ModuleCtx ModuleCtx::make(ModuleKind kind, const WhittakerHom& phi,
                          std::optional<Xi> xi, std::optional<Rational> c) {
  ModuleCtx ctx;
  ctx.kind_ = kind;
  ctx.phi_ = phi;

  const bool wantXi =
      kind == ModuleKind::Generic || kind == ModuleKind::QuotientOmegaTilde;
  const bool wantC = kind == ModuleKind::QuotientOmegaTilde;
  if (wantXi && !xi)
    throw ParamError("module kind '" + kindName(kind) + "' requires xi");
  if (!wantXi && xi)
    throw ParamError("module kind '" + kindName(kind) + "' does not accept xi");
  if (wantC && !c)
    throw ParamError("module kind '" + kindName(kind) + "' requires c");
  if (!wantC && c)
    throw ParamError("module kind '" + kindName(kind) + "' does not accept c");
  if (xi) ctx.xi_ = *xi;
  if (c) ctx.c_ = *c;

  // The killed spans are stable under the action only when the
  // homomorphism vanishes on the corresponding mode-1 generators.
  switch (kind) {
    case ModuleKind::QuotientOmega:
    case ModuleKind::QuotientOmegaTilde:
      if (phi.i1 != 0 || phi.j1 != 0)
        throw ClosureError("omega quotient requires phi(I1) = phi(J1) = 0");
      break;
    case ModuleKind::QuotientGamma:
      if (phi.i1 != 0)
        throw ClosureError("gamma quotient requires phi(I1) = 0");
      break;
    case ModuleKind::QuotientUpsilon:
      if (phi.j1 != 0)
        throw ClosureError("upsilon quotient requires phi(J1) = 0");
      break;
    default:
      break;
  }
  return ctx;
}

const Xi& ModuleCtx::xi() const {
  if (!usesXi()) throw DomainError("context has no xi");
  return xi_;
}

const Rational& ModuleCtx::c() const {
  if (!usesC()) throw DomainError("context has no c");
  return c_;
}

bool ModuleCtx::operator==(const ModuleCtx& o) const {
  if (kind_ != o.kind_ || !(phi_ == o.phi_)) return false;
  if (usesXi() && xi_ != o.xi_) return false;
  if (usesC() && c_ != o.c_) return false;
  return true;
}

ModuleCtx parentCtx(const ModuleCtx& ctx) {
  switch (ctx.kind()) {
    case ModuleKind::QuotientOmega:
    case ModuleKind::QuotientGamma:
    case ModuleKind::QuotientUpsilon:
      return ModuleCtx::make(ModuleKind::UniversalCenterless, ctx.phi());
    case ModuleKind::QuotientOmegaTilde:
      return ModuleCtx::make(ModuleKind::Generic, ctx.phi(), ctx.xi());
    default:
      return ctx;
  }
}

bool submoduleMembership(ModuleKind kind, const PBWMonomial& m, SpanRule rule) {
  auto positive = [rule](const Partition& a, const Partition& b) {
    if (rule == SpanRule::FactorCount) return a.length() + b.length() > 0;
    return a.weight() + b.weight() > 0;
  };
  switch (kind) {
    case ModuleKind::QuotientOmega:
    case ModuleKind::QuotientOmegaTilde:
      return positive(m.i, m.j);
    case ModuleKind::QuotientGamma:
      return positive(m.i, Partition{});
    case ModuleKind::QuotientUpsilon:
      return positive(m.j, Partition{});
    default:
      throw DomainError("submodule membership asks a quotient kind");
  }
}

ModuleVector quotientReduce(const ModuleCtx& ctx, const ModuleVector& v,
                            SpanRule rule) {
  if (!ctx.isQuotient()) return v;
  ModuleVector out;
  for (const auto& [m, coeff] : v.terms()) {
    if (submoduleMembership(ctx.kind(), m, rule)) continue;
    if (ctx.kind() == ModuleKind::QuotientOmegaTilde && m.h.zeroCount() > 0) {
      const unsigned t = m.h.zeroCount();
      PBWMonomial reduced = m;
      for (unsigned k = 0; k < t; ++k) reduced.h.removePart(0);
      out.add(reduced, coeff * pow(ctx.c(), t));
    } else {
      out.add(m, coeff);
    }
  }
  return out;
}

int BasisLabel::compare(const BasisLabel& o) const {
  if (int c = mono.compare(o.mono)) return c;
  if (alpha != o.alpha) return alpha < o.alpha ? -1 : 1;
  return 0;
}

ModuleVector BasisLabel::vec() const {
  return ModuleVector::term(mono, CentralPoly::monomial(alpha, Rational(1)));
}

void forEachPartition(unsigned budget, bool allowZero,
                      const std::function<void(const Partition&)>& fn) {
  Partition acc;
  // Parts descend from `budget`; a part k >= 1 costs k, a zero part costs 1.
  std::function<void(unsigned, unsigned)> rec = [&](unsigned maxPart,
                                                    unsigned remaining) {
    if (maxPart == 0) {
      fn(acc);
      if (!allowZero) return;
      for (unsigned t = 1; t <= remaining; ++t) {
        acc.addPart(0, 1);
        fn(acc);
      }
      for (unsigned t = 1; t <= remaining; ++t) acc.removePart(0);
      return;
    }
    unsigned added = 0;
    for (unsigned cnt = 0; cnt * maxPart <= remaining; ++cnt) {
      if (cnt > 0) {
        acc.addPart(maxPart);
        ++added;
      }
      rec(maxPart - 1, remaining - cnt * maxPart);
    }
    for (unsigned t = 0; t < added; ++t) acc.removePart(maxPart);
  };
  rec(budget, budget);
}

void forEachMonomial(unsigned budget,
                     const std::function<void(const PBWMonomial&)>& fn) {
  auto cost = [](const Partition& p) {
    return static_cast<unsigned>(p.weight()) + p.zeroCount();
  };
  forEachPartition(budget, true, [&](const Partition& j) {
    const unsigned bj = budget - cost(j);
    forEachPartition(bj, true, [&](const Partition& i) {
      const unsigned bi = bj - cost(i);
      forEachPartition(bi, true, [&](const Partition& h) {
        const unsigned bh = bi - cost(h);
        forEachPartition(bh, true, [&](const Partition& l) {
          fn(PBWMonomial{j, i, h, l});
        });
      });
    });
  });
}

std::vector<BasisLabel> enumerateWindow(const ModuleCtx& ctx, Window w) {
  const unsigned B = w.bound;
  const bool noJ = ctx.kind() == ModuleKind::QuotientOmega ||
                   ctx.kind() == ModuleKind::QuotientOmegaTilde ||
                   ctx.kind() == ModuleKind::QuotientUpsilon;
  const bool noI = ctx.kind() == ModuleKind::QuotientOmega ||
                   ctx.kind() == ModuleKind::QuotientOmegaTilde ||
                   ctx.kind() == ModuleKind::QuotientGamma;
  const bool hZero = ctx.kind() != ModuleKind::QuotientOmegaTilde;

  auto cost = [](const Partition& p) {
    return static_cast<unsigned>(p.weight()) + p.zeroCount();
  };

  std::vector<BasisLabel> labels;
  auto emit = [&](const PBWMonomial& m) {
    const unsigned used = cost(m.j) + cost(m.i) + cost(m.h) + cost(m.l);
    if (!ctx.symbolicCenter()) {
      labels.push_back(BasisLabel{m, {0, 0, 0}});
      return;
    }
    const unsigned slack = B - used;
    for (unsigned a1 = 0; a1 <= slack; ++a1)
      for (unsigned a2 = 0; a1 + a2 <= slack; ++a2)
        for (unsigned a3 = 0; a1 + a2 + a3 <= slack; ++a3)
          labels.push_back(BasisLabel{m, {a1, a2, a3}});
  };

  forEachPartition(noJ ? 0 : B, true, [&](const Partition& j) {
    const unsigned bj = B - cost(j);
    forEachPartition(noI ? 0 : bj, true, [&](const Partition& i) {
      const unsigned bi = bj - cost(i);
      forEachPartition(bi, hZero, [&](const Partition& h) {
        const unsigned bh = bi - cost(h);
        forEachPartition(bh, true, [&](const Partition& l) {
          emit(PBWMonomial{j, i, h, l});
        });
      });
    });
  });

  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace gca
