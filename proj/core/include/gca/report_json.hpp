#pragma once

#include <string>

#include "gca/checks.hpp"
#include "gca/config.hpp"
#include "gca/solver.hpp"

namespace gca {

// Deterministic JSON payloads (fixed key order, two-space indent, rationals
// as strings). Timestamps are the caller's business: these payloads must be
// byte-identical across runs with identical inputs.

std::string contextToJson(const ModuleCtx& ctx);
std::string homToJson(const WhittakerHom& phi);

// {context, bound, type, dimension, basis, verified}
std::string solveReportToJson(const SolveReport& report);

// {context, bound, verdict, witness?}
std::string probeToJson(const ModuleCtx& ctx, const ProbeResult& probe);

// {suite, checks: [{name, pass, cases, detail?}...], failed}
std::string suiteToJson(const std::string& name, const Suite& suite);

}  // namespace gca
