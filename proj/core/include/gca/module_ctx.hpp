#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gca/bracket.hpp"
#include "gca/module_vector.hpp"
#include "gca/whittaker.hpp"

namespace gca {

enum class ModuleKind {
  UniversalCenterless,  // induced module over the plain algebra
  UniversalCentral,     // induced module over the central extension
  Generic,              // central charges specialized to scalars xi
  QuotientOmega,        // centerless, I and J factors killed
  QuotientOmegaTilde,   // generic, I/J killed and H[0] specialized to c
  QuotientGamma,        // centerless, I factors killed
  QuotientUpsilon       // centerless, J factors killed
};

std::string kindName(ModuleKind k);
std::optional<ModuleKind> kindFromName(const std::string& name);

using Xi = std::array<Rational, 3>;

// Which defining condition cuts out the killed span: the factor-count
// reading (at least one I/J factor, zero modes included) or the weight
// reading (total I/J part weight positive). FactorCount is the span that
// is actually closed under the action; Weight is exposed so the difference
// can be demonstrated.
enum class SpanRule { FactorCount, Weight };

// A validated Whittaker-module context: module family, homomorphism, and
// any central-charge / H[0] specializations. Immutable after construction.
class ModuleCtx {
 public:
  // The universal module over the plain algebra with the zero homomorphism.
  ModuleCtx() = default;

  // Throws ParamError when xi/c are missing or not accepted by the kind;
  // throws ClosureError when the homomorphism violates a quotient kind's
  // stability precondition.
  static ModuleCtx make(ModuleKind kind, const WhittakerHom& phi,
                        std::optional<Xi> xi = std::nullopt,
                        std::optional<Rational> c = std::nullopt);

  ModuleKind kind() const { return kind_; }
  const WhittakerHom& phi() const { return phi_; }
  const Xi& xi() const;
  const Rational& c() const;

  bool usesXi() const {
    return kind_ == ModuleKind::Generic || kind_ == ModuleKind::QuotientOmegaTilde;
  }
  bool usesC() const { return kind_ == ModuleKind::QuotientOmegaTilde; }
  bool isQuotient() const {
    return kind_ == ModuleKind::QuotientOmega ||
           kind_ == ModuleKind::QuotientOmegaTilde ||
           kind_ == ModuleKind::QuotientGamma ||
           kind_ == ModuleKind::QuotientUpsilon;
  }
  // Central charges appear as polynomial symbols (only in the universal
  // module over the central extension).
  bool symbolicCenter() const { return kind_ == ModuleKind::UniversalCentral; }

  AlgebraKind algebra() const {
    return (kind_ == ModuleKind::UniversalCentral || usesXi())
               ? AlgebraKind::Central
               : AlgebraKind::Centerless;
  }

  bool operator==(const ModuleCtx& o) const;

 private:
  ModuleKind kind_ = ModuleKind::UniversalCenterless;
  WhittakerHom phi_{};
  Xi xi_{Rational(0), Rational(0), Rational(0)};
  Rational c_{0};
};

// The module a quotient context reduces from. Identity for non-quotient
// kinds.
ModuleCtx parentCtx(const ModuleCtx& ctx);

// True iff the monomial spans the killed submodule of the quotient kind.
// Throws DomainError for non-quotient kinds.
bool submoduleMembership(ModuleKind kind, const PBWMonomial& m,
                         SpanRule rule = SpanRule::FactorCount);

// Projects a vector onto the quotient basis: killed monomials are dropped
// and, for the OmegaTilde kind, each H[0] factor is replaced by the scalar
// c (H[0] commutes with every H and L generator, so the substitution is a
// module map on the surviving span). Identity for non-quotient kinds.
ModuleVector quotientReduce(const ModuleCtx& ctx, const ModuleVector& v,
                            SpanRule rule = SpanRule::FactorCount);

// Truncation window: the span of basis labels whose trunc functional
// (coefficient degree + weight + zero-mode count) is at most the bound.
struct Window {
  unsigned bound = 0;
};

// Basis label of a window: a monomial plus, for the symbolic-center module,
// a central monomial exponent (zero otherwise).
struct BasisLabel {
  PBWMonomial mono;
  std::array<unsigned, 3> alpha{0, 0, 0};

  unsigned alphaDegree() const { return alpha[0] + alpha[1] + alpha[2]; }
  int compare(const BasisLabel& o) const;
  bool operator<(const BasisLabel& o) const { return compare(o) < 0; }
  bool operator==(const BasisLabel& o) const {
    return alpha == o.alpha && mono == o.mono;
  }
  // The basis vector this label names.
  ModuleVector vec() const;
};

// All basis labels of the window in canonical key order. Quotient kinds
// enumerate the quotient basis (killed monomials and, for OmegaTilde,
// H[0] factors excluded).
std::vector<BasisLabel> enumerateWindow(const ModuleCtx& ctx, Window w);

// Calls fn on every partition with weight + zeroCount <= budget; when
// allowZero is false, parts equal to zero are excluded.
void forEachPartition(unsigned budget, bool allowZero,
                      const std::function<void(const Partition&)>& fn);

// Calls fn on every monomial with weight + zeroCount <= budget (no context
// filtering).
void forEachMonomial(unsigned budget,
                     const std::function<void(const PBWMonomial&)>& fn);

}  // namespace gca
