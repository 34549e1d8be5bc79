#include "gca/report_json.hpp"

#include <json.hpp>

namespace gca {

namespace {

using Json = nlohmann::ordered_json;

Json homJson(const WhittakerHom& phi) {
  Json out;
  out["L1"] = toString(phi.l1);
  out["L2"] = toString(phi.l2);
  out["H1"] = toString(phi.h1);
  out["I1"] = toString(phi.i1);
  out["J1"] = toString(phi.j1);
  return out;
}

Json contextJson(const ModuleCtx& ctx) {
  Json out;
  out["kind"] = kindName(ctx.kind());
  out["phi"] = homJson(ctx.phi());
  if (ctx.usesXi()) {
    Json xi = Json::array();
    for (const Rational& x : ctx.xi()) xi.push_back(toString(x));
    out["xi"] = xi;
  }
  if (ctx.usesC()) out["c"] = toString(ctx.c());
  return out;
}

}  // namespace

std::string contextToJson(const ModuleCtx& ctx) { return contextJson(ctx).dump(2); }

std::string homToJson(const WhittakerHom& phi) { return homJson(phi).dump(2); }

std::string solveReportToJson(const SolveReport& report) {
  Json out;
  out["context"] = contextJson(report.ctx);
  out["bound"] = report.bound;
  out["type"] = homJson(report.type);
  out["dimension"] = report.dimension();
  Json basis = Json::array();
  for (const ModuleVector& v : report.basis) basis.push_back(v.str());
  out["basis"] = basis;
  out["verified"] = report.verified;
  return out.dump(2);
}

std::string probeToJson(const ModuleCtx& ctx, const ProbeResult& probe) {
  Json out;
  out["context"] = contextJson(ctx);
  out["bound"] = probe.bound;
  out["verdict"] = probe.verdict();
  if (probe.witness) out["witness"] = probe.witness->str();
  return out.dump(2);
}

std::string suiteToJson(const std::string& name, const Suite& suite) {
  Json out;
  out["suite"] = name;
  Json checks = Json::array();
  int failed = 0;
  for (const CheckResult& c : suite) {
    Json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["cases"] = c.cases;
    if (!c.pass) {
      entry["counterexample"] = c.detail;
      ++failed;
    }
    checks.push_back(entry);
  }
  out["checks"] = checks;
  out["failed"] = failed;
  return out.dump(2);
}

}  // namespace gca
