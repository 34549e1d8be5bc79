#include "gca/config.hpp"

#include <json.hpp>

#include "gca/errors.hpp"

namespace gca {

namespace {

using Json = nlohmann::ordered_json;

void rejectUnknownKeys(const Json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

Rational ratField(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key))
    throw ConfigError("missing key '" + std::string(key) + "' in " + where);
  const Json& v = obj.at(key);
  if (!v.is_string())
    throw ConfigError("key '" + std::string(key) + "' in " + where +
                      " must be a rational string");
  try {
    return parseRational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

WhittakerHom parseHom(const Json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  rejectUnknownKeys(obj, {"L1", "L2", "H1", "I1", "J1"}, where);
  WhittakerHom phi;
  phi.l1 = ratField(obj, "L1", where);
  phi.l2 = ratField(obj, "L2", where);
  phi.h1 = ratField(obj, "H1", where);
  phi.i1 = ratField(obj, "I1", where);
  phi.j1 = ratField(obj, "J1", where);
  return phi;
}

}  // namespace

RunConfig parseRunConfig(const std::string& jsonText) {
  Json doc;
  try {
    doc = Json::parse(jsonText);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  rejectUnknownKeys(doc, {"context", "bound", "psi"}, "config");

  if (!doc.contains("context")) throw ConfigError("missing key 'context'");
  const Json& cx = doc.at("context");
  if (!cx.is_object()) throw ConfigError("'context' must be an object");
  rejectUnknownKeys(cx, {"kind", "phi", "xi", "c"}, "context");

  if (!cx.contains("kind") || !cx.at("kind").is_string())
    throw ConfigError("context.kind must be a string");
  const auto kind = kindFromName(cx.at("kind").get<std::string>());
  if (!kind)
    throw ConfigError("unknown module kind '" +
                      cx.at("kind").get<std::string>() + "'");
  if (!cx.contains("phi")) throw ConfigError("missing key 'context.phi'");
  const WhittakerHom phi = parseHom(cx.at("phi"), "context.phi");

  std::optional<Xi> xi;
  if (cx.contains("xi")) {
    const Json& xv = cx.at("xi");
    if (!xv.is_array() || xv.size() != 3)
      throw ConfigError("context.xi must be an array of three rationals");
    Xi out;
    for (std::size_t s = 0; s < 3; ++s) {
      if (!xv[s].is_string())
        throw ConfigError("context.xi entries must be rational strings");
      try {
        out[s] = parseRational(xv[s].get<std::string>());
      } catch (const ParseError& e) {
        throw ConfigError(std::string("context.xi: ") + e.what());
      }
    }
    xi = out;
  }
  std::optional<Rational> c;
  if (cx.contains("c")) {
    if (!cx.at("c").is_string())
      throw ConfigError("context.c must be a rational string");
    try {
      c = parseRational(cx.at("c").get<std::string>());
    } catch (const ParseError& e) {
      throw ConfigError(std::string("context.c: ") + e.what());
    }
  }

  RunConfig config;
  try {
    config.ctx = ModuleCtx::make(*kind, phi, xi, c);
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid context: ") + e.what());
  }

  if (doc.contains("bound")) {
    const Json& b = doc.at("bound");
    if (!b.is_number_unsigned())
      throw ConfigError("'bound' must be a nonnegative integer");
    config.bound = b.get<unsigned>();
  }
  if (doc.contains("psi")) config.psi = parseHom(doc.at("psi"), "psi");
  return config;
}

std::string runConfigEcho(const RunConfig& config) {
  Json cx;
  cx["kind"] = kindName(config.ctx.kind());
  Json phi;
  phi["L1"] = toString(config.ctx.phi().l1);
  phi["L2"] = toString(config.ctx.phi().l2);
  phi["H1"] = toString(config.ctx.phi().h1);
  phi["I1"] = toString(config.ctx.phi().i1);
  phi["J1"] = toString(config.ctx.phi().j1);
  cx["phi"] = phi;
  if (config.ctx.usesXi()) {
    Json xi = Json::array();
    for (const Rational& x : config.ctx.xi()) xi.push_back(toString(x));
    cx["xi"] = xi;
  }
  if (config.ctx.usesC()) cx["c"] = toString(config.ctx.c());

  Json doc;
  doc["context"] = cx;
  if (config.bound) doc["bound"] = *config.bound;
  if (config.psi) {
    Json psi;
    psi["L1"] = toString(config.psi->l1);
    psi["L2"] = toString(config.psi->l2);
    psi["H1"] = toString(config.psi->h1);
    psi["I1"] = toString(config.psi->i1);
    psi["J1"] = toString(config.psi->j1);
    doc["psi"] = psi;
  }
  return doc.dump(2);
}

}  // namespace gca
