#include "gca/action.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "gca/errors.hpp"

namespace gca {

long truncFunctional(const PBWMonomial& m, int coeffDeg) {
  return coeffDeg + m.weight() + long(m.zeroCount());
}

namespace {

// Straightening is a terminating rewrite (each swap either reorders or
// emits a strictly shorter word), but a generous fuel cap turns any logic
// error into a loud failure instead of a hang.
constexpr unsigned long long kFuel = 50'000'000ULL;

struct Pending {
  CentralPoly coeff;
  Word word;
};

bool outOfOrder(GeneratorId a, GeneratorId b) {
  const int ba = blockIndex(a.family()), bb = blockIndex(b.family());
  if (ba != bb) return ba > bb;
  return a.mode() > b.mode();
}

// Multiplies the coefficient by the value of a central generator in this
// context.
void foldCentral(const ModuleCtx& ctx, GeneratorId g, CentralPoly& coeff) {
  const int s = g.centralIndex();
  if (ctx.symbolicCenter()) {
    coeff *= CentralPoly::generator(s);
  } else if (ctx.usesXi()) {
    coeff *= ctx.xi()[static_cast<std::size_t>(s - 1)];
  } else {
    throw ContextError("central generator " + g.str() +
                       " acts on a centerless module");
  }
}

ModuleVector straightenRaw(const ModuleCtx& ctx, Word word, CentralPoly coeff,
                           SwapStrategy strategy) {
  ModuleVector out;
  std::vector<Pending> stack;
  stack.push_back(Pending{std::move(coeff), std::move(word)});
  unsigned long long fuel = kFuel;

  while (!stack.empty()) {
    if (fuel-- == 0) throw EngineError("straightening fuel exhausted");
    Pending t = std::move(stack.back());
    stack.pop_back();
    if (t.coeff.isZero()) continue;
    Word& w = t.word;

    // Central generators commute out into the coefficient.
    if (std::any_of(w.begin(), w.end(),
                    [](const GeneratorId& g) { return g.isCentral(); })) {
      Word rest;
      rest.reserve(w.size());
      for (const GeneratorId& g : w) {
        if (g.isCentral())
          foldCentral(ctx, g, t.coeff);
        else
          rest.push_back(g);
      }
      w = std::move(rest);
      if (t.coeff.isZero()) continue;
    }

    // Eliminate the rightmost positive-mode generator first: it is the
    // closest to the cyclic vector, and every commutator it spawns is a
    // strictly shorter word.
    std::size_t pos = w.size();
    for (std::size_t k = w.size(); k-- > 0;) {
      if (w[k].mode() >= 1) {
        pos = k;
        break;
      }
    }
    if (pos != w.size()) {
      if (pos + 1 == w.size()) {
        const Rational value = phiEval(ctx.phi(), w[pos]);
        if (value != 0) {
          w.pop_back();
          t.coeff *= value;
          stack.push_back(std::move(t));
        }
      } else {
        const GeneratorId a = w[pos], b = w[pos + 1];
        const LieElement br = bracketGen(ctx.algebra(), a, b);
        Pending swapped{t.coeff, w};
        std::swap(swapped.word[pos], swapped.word[pos + 1]);
        stack.push_back(std::move(swapped));
        for (const auto& [g, c] : br.terms()) {
          Pending shorter{t.coeff * c, Word()};
          shorter.word.reserve(w.size() - 1);
          shorter.word.insert(shorter.word.end(), w.begin(), w.begin() + pos);
          shorter.word.push_back(g);
          shorter.word.insert(shorter.word.end(), w.begin() + pos + 2, w.end());
          stack.push_back(std::move(shorter));
        }
      }
      continue;
    }

    // All modes are nonpositive: bubble into block order.
    std::size_t swapAt = w.size();
    if (strategy == SwapStrategy::LeftmostFirst) {
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (outOfOrder(w[k], w[k + 1])) {
          swapAt = k;
          break;
        }
      }
    } else {
      for (std::size_t k = w.size(); k-- > 1;) {
        if (outOfOrder(w[k - 1], w[k])) {
          swapAt = k - 1;
          break;
        }
      }
    }
    if (swapAt == w.size()) {
      out.add(monomialFromWord(w), t.coeff);
      continue;
    }
    const GeneratorId a = w[swapAt], b = w[swapAt + 1];
    const LieElement br = bracketGen(ctx.algebra(), a, b);
    Pending swapped{t.coeff, w};
    std::swap(swapped.word[swapAt], swapped.word[swapAt + 1]);
    stack.push_back(std::move(swapped));
    for (const auto& [g, c] : br.terms()) {
      Pending shorter{t.coeff * c, Word()};
      shorter.word.reserve(w.size() - 1);
      shorter.word.insert(shorter.word.end(), w.begin(), w.begin() + swapAt);
      shorter.word.push_back(g);
      shorter.word.insert(shorter.word.end(), w.begin() + swapAt + 2, w.end());
      stack.push_back(std::move(shorter));
    }
  }
  return out;
}

void requireCompatibleCoefficients(const ModuleCtx& ctx, const ModuleVector& v) {
  if (ctx.symbolicCenter()) return;
  for (const auto& [m, coeff] : v.terms()) {
    (void)m;
    if (!coeff.isConstant())
      throw ContextError(
          "vector carries symbolic central coefficients not admitted by a '" +
          kindName(ctx.kind()) + "' module");
  }
}

}  // namespace

ModuleVector straightenWord(const ModuleCtx& ctx, std::span<const GeneratorId> word,
                            SwapStrategy strategy) {
  Word w(word.begin(), word.end());
  return quotientReduce(
      ctx, straightenRaw(ctx, std::move(w), CentralPoly(Rational(1)), strategy));
}

ModuleVector actGen(const ModuleCtx& ctx, GeneratorId g, const ModuleVector& v) {
  requireCompatibleCoefficients(ctx, v);
  ModuleVector out;
  for (const auto& [m, coeff] : v.terms()) {
    Word w;
    w.reserve(m.length() + 1);
    w.push_back(g);
    const Word tail = m.word();
    w.insert(w.end(), tail.begin(), tail.end());
    out += straightenRaw(ctx, std::move(w), coeff, SwapStrategy::LeftmostFirst);
  }
  return quotientReduce(ctx, out);
}

ModuleVector actWord(const ModuleCtx& ctx, std::span<const GeneratorId> word) {
  return applyWord(ctx, word, ModuleVector::unit());
}

ModuleVector applyWord(const ModuleCtx& ctx, std::span<const GeneratorId> word,
                       const ModuleVector& v) {
  requireCompatibleCoefficients(ctx, v);
  ModuleVector out;
  for (const auto& [m, coeff] : v.terms()) {
    Word w(word.begin(), word.end());
    const Word tail = m.word();
    w.insert(w.end(), tail.begin(), tail.end());
    out += straightenRaw(ctx, std::move(w), coeff, SwapStrategy::LeftmostFirst);
  }
  return quotientReduce(ctx, out);
}

ModuleVector starAct(const ModuleCtx& ctx, GeneratorId g, const ModuleVector& v) {
  if (g.isCentral() || g.mode() < 1)
    throw DomainError("star action needs a positive-mode generator, got " +
                      g.str());
  ModuleVector out = actGen(ctx, g, v);
  // The shift acts on the coset, so it is the reduced vector that scales.
  ModuleVector shift = quotientReduce(ctx, v);
  shift *= phiEval(ctx.phi(), g);
  out -= shift;
  return out;
}

std::optional<int> nilpotencyIndex(const ModuleCtx& ctx, GeneratorId g,
                                   const ModuleVector& v, int cap) {
  ModuleVector cur = v;
  for (int p = 1; p <= cap; ++p) {
    cur = starAct(ctx, g, cur);
    if (cur.isZero()) return p;
  }
  return std::nullopt;
}

}  // namespace gca
