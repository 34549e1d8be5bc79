#pragma once

#include <stdexcept>
#include <string>

namespace gca {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value was used outside its mathematical domain (e.g. evaluating a
// Whittaker homomorphism on a generator of nonpositive mode).
struct DomainError : Error {
  using Error::Error;
};

// A vector or coefficient is incompatible with the module context it is
// used in (e.g. a symbolic central coefficient in a centerless module).
struct ContextError : Error {
  using Error::Error;
};

// A module constructor is missing a required parameter, or was handed one
// its kind does not accept.
struct ParamError : Error {
  using Error::Error;
};

// The requested quotient span is not stable under the algebra action for
// the given homomorphism.
struct ClosureError : Error {
  using Error::Error;
};

// The straightening engine ran out of fuel, or a window computation
// produced a term outside the window.
struct EngineError : Error {
  using Error::Error;
};

// Text input could not be parsed; carries the failing offset.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

// Invalid, missing or unknown fields in a run configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace gca
