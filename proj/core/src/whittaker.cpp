#include "gca/whittaker.hpp"

#include "gca/errors.hpp"

namespace gca {

Rational phiEval(const WhittakerHom& phi, GeneratorId g) {
  if (g.isCentral())
    throw DomainError("homomorphism undefined on central generator " + g.str());
  const int mode = g.mode();
  if (mode < 1)
    throw DomainError("homomorphism undefined on nonpositive mode " + g.str());
  switch (g.family()) {
    case Family::L:
      if (mode == 1) return phi.l1;
      if (mode == 2) return phi.l2;
      return Rational(0);
    case Family::H:
      return mode == 1 ? phi.h1 : Rational(0);
    case Family::I:
      return mode == 1 ? phi.i1 : Rational(0);
    case Family::J:
      return mode == 1 ? phi.j1 : Rational(0);
  }
  return Rational(0);
}

}  // namespace gca
