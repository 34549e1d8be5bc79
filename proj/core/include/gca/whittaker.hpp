#pragma once

#include "gca/generator.hpp"
#include "gca/rational.hpp"

namespace gca {

// Homomorphism from the positive part of the algebra to scalars,
// determined by its values on L1, L2, H1, I1, J1. Every quintuple defines
// a valid homomorphism: brackets of positive-mode generators land in modes
// >= 2 and never produce L2 or a mode-1 generator.
struct WhittakerHom {
  Rational l1, l2, h1, i1, j1;

  bool nonsingular() const { return i1 != 0 && j1 != 0; }

  bool operator==(const WhittakerHom& o) const {
    return l1 == o.l1 && l2 == o.l2 && h1 == o.h1 && i1 == o.i1 && j1 == o.j1;
  }
};

// Value of the homomorphism on a positive-mode generator: the stored value
// on L1, L2, H1, I1, J1, and zero on L[m] for m>=3 and H/I/J[n] for n>=2.
// Throws DomainError when the mode is <= 0 or the generator is central.
Rational phiEval(const WhittakerHom& phi, GeneratorId g);

}  // namespace gca
