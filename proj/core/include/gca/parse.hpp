#pragma once

#include <string_view>

#include "gca/bracket.hpp"
#include "gca/central_poly.hpp"
#include "gca/module_vector.hpp"

namespace gca {

// Parsers for the textual forms the printers emit. Whitespace between
// tokens is tolerated; everything printed round-trips. All throw
// ParseError with the failing offset.

GeneratorId parseGenerator(std::string_view text);

// "-2*L[0] + 1*C1" or "0".
LieElement parseLieElement(std::string_view text);

// "J[-2]^1 I[0]^2 H[-1]^3 L[0]^1" or "1". Modes must be nonpositive.
PBWMonomial parseMonomial(std::string_view text);

// "3/2*C1^2*C3 + -1*C2", a bare rational, or "0".
CentralPoly parseCentralPoly(std::string_view text);

// "coeff * monomial" terms joined by " + ", coefficient either a rational
// or a parenthesized polynomial; "0" for the zero vector.
ModuleVector parseModuleVector(std::string_view text);

}  // namespace gca
