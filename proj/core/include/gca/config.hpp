#pragma once

#include <optional>
#include <string>

#include "gca/module_ctx.hpp"

namespace gca {

// One run configuration, shared by every subcommand. Parsed strictly:
// unknown keys anywhere are rejected, rationals are strings ("p/q" or an
// integer literal).
struct RunConfig {
  ModuleCtx ctx;
  std::optional<unsigned> bound;
  // Optional solve-type override for the vector solver.
  std::optional<WhittakerHom> psi;
};

RunConfig parseRunConfig(const std::string& jsonText);

// Canonical serialization of the configuration (fixed key order, rationals
// as strings); reports echo this back.
std::string runConfigEcho(const RunConfig& config);

}  // namespace gca
