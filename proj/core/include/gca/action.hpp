#pragma once

#include <optional>
#include <span>

#include "gca/module_ctx.hpp"

namespace gca {

// N(m) = coefficient degree + monomial weight + zero-mode count. Pass 0
// for coeffDeg over a constant coefficient ring. Non-increasing under the
// star action, which is what makes windows exact.
long truncFunctional(const PBWMonomial& m, int coeffDeg);

// Which adjacent out-of-order pair the block-sorting phase swaps first.
// Both strategies straighten to the same canonical vector; the choice is
// exposed for confluence testing.
enum class SwapStrategy { LeftmostFirst, RightmostFirst };

// Canonical form of word * w applied to the cyclic vector. Positive-mode
// generators are commuted rightward until they evaluate through the
// homomorphism; nonpositive words are then sorted into J-I-H-L block order
// with nonincreasing modes, every swap emitting a strictly shorter
// commutator word. The result is quotient-reduced by the context.
ModuleVector straightenWord(const ModuleCtx& ctx, std::span<const GeneratorId> word,
                            SwapStrategy strategy = SwapStrategy::LeftmostFirst);

// The module action g . v in canonical form, quotient-reduced by the
// context. Throws ContextError when v carries symbolic central
// coefficients the context does not admit.
ModuleVector actGen(const ModuleCtx& ctx, GeneratorId g, const ModuleVector& v);

// word . w_phi, the generators applied right to left; the empty word gives
// the cyclic vector.
ModuleVector actWord(const ModuleCtx& ctx, std::span<const GeneratorId> word);

// word . v for an arbitrary vector.
ModuleVector applyWord(const ModuleCtx& ctx, std::span<const GeneratorId> word,
                       const ModuleVector& v);

// g * v = g.v - phi(g).v for a positive-mode generator g.
// Throws DomainError when g is central or has mode <= 0.
ModuleVector starAct(const ModuleCtx& ctx, GeneratorId g, const ModuleVector& v);

// Smallest p <= cap with (g*)^p v = 0, or nullopt when the cap is hit.
std::optional<int> nilpotencyIndex(const ModuleCtx& ctx, GeneratorId g,
                                   const ModuleVector& v, int cap);

}  // namespace gca
