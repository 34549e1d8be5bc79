// Command-line harness for the planar Galilean conformal algebra toolkit:
// bracket tables, module actions, exact Whittaker-vector solves on
// truncation windows, reducibility probes, and the verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gca/action.hpp"
#include "gca/checks.hpp"
#include "gca/config.hpp"
#include "gca/errors.hpp"
#include "gca/parse.hpp"
#include "gca/report_json.hpp"
#include "gca/solver.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "gca 0.1.0";

std::string isoTimestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gca::ConfigError("cannot open config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

gca::RunConfig loadConfig(const std::string& path, long long boundOverride) {
  gca::RunConfig config = gca::parseRunConfig(readFile(path));
  if (boundOverride >= 0) config.bound = static_cast<unsigned>(boundOverride);
  return config;
}

// Every report document: schema version, a header isolating the one
// nondeterministic field, the echoed configuration, then the payload.
Json wrapReport(const gca::RunConfig* config, const char* payloadKey,
                const std::string& payloadJson) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  Json header;
  header["generated"] = isoTimestamp();
  header["tool"] = kToolVersion;
  doc["header"] = header;
  if (config) doc["config"] = Json::parse(gca::runConfigEcho(*config));
  doc[payloadKey] = Json::parse(payloadJson);
  return doc;
}

void emit(const Json& doc, const std::string& outPath, const std::string& summary) {
  if (outPath.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream out(outPath);
    if (!out) throw gca::ConfigError("cannot write '" + outPath + "'");
    out << doc.dump(2) << '\n';
    if (!summary.empty()) std::cout << summary;
  }
}

unsigned requireBound(const gca::RunConfig& config) {
  if (!config.bound)
    throw gca::ConfigError("no window bound: set 'bound' in the config or pass --bound");
  return *config.bound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the planar Galilean conformal algebra, "
               "its central extension, and their Whittaker modules"};
  app.require_subcommand(1);

  std::string configPath, outPath, kindFlag = "centerless";
  long long boundFlag = -1;
  std::string suiteName = "all";
  std::vector<std::string> wordArgs;
  std::string genA, genB;

  CLI::App* bracket = app.add_subcommand("bracket", "Bracket of two generators");
  bracket->add_option("--kind", kindFlag, "centerless | central")
      ->check(CLI::IsMember({"centerless", "central"}));
  bracket->add_option("a", genA, "first generator, e.g. \"L[1]\"")->required();
  bracket->add_option("b", genB, "second generator, e.g. \"L[-1]\"")->required();

  CLI::App* act = app.add_subcommand("act", "Apply a generator word to the cyclic vector");
  act->add_option("--config", configPath, "run configuration (JSON)")->required();
  act->add_option("word", wordArgs, "generators, applied right to left");

  CLI::App* vectors = app.add_subcommand("vectors", "Solve for Whittaker vectors on a window");
  vectors->add_option("--config", configPath, "run configuration (JSON)")->required();
  vectors->add_option("--bound", boundFlag, "window bound override")
      ->check(CLI::NonNegativeNumber);
  vectors->add_option("--out", outPath, "write the JSON report here");

  CLI::App* probe = app.add_subcommand("probe", "Reducibility probe on a window");
  probe->add_option("--config", configPath, "run configuration (JSON)")->required();
  probe->add_option("--bound", boundFlag, "window bound override")
      ->check(CLI::NonNegativeNumber);
  probe->add_option("--out", outPath, "write the JSON report here");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suiteName, "axioms | lemmas | bounds | closure | all")
      ->check(CLI::IsMember(gca::suiteNames()));
  verify->add_option("--out", outPath, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bracket->parsed()) {
      const gca::AlgebraKind kind = kindFlag == "central"
                                        ? gca::AlgebraKind::Central
                                        : gca::AlgebraKind::Centerless;
      const gca::LieElement result = gca::bracketGen(
          kind, gca::parseGenerator(genA), gca::parseGenerator(genB));
      std::cout << result.str() << '\n';
    } else if (act->parsed()) {
      const gca::RunConfig config = loadConfig(configPath, -1);
      gca::Word word;
      for (const std::string& text : wordArgs)
        word.push_back(gca::parseGenerator(text));
      std::cout << gca::actWord(config.ctx, word).str() << '\n';
    } else if (vectors->parsed()) {
      const gca::RunConfig config = loadConfig(configPath, boundFlag);
      const unsigned bound = requireBound(config);
      const gca::WhittakerHom psi = config.psi ? *config.psi : config.ctx.phi();
      const gca::SolveReport report =
          gca::whittakerSolve(config.ctx, gca::Window{bound}, psi);
      std::ostringstream summary;
      summary << "kind=" << gca::kindName(config.ctx.kind()) << " bound=" << bound
              << " dimension=" << report.dimension()
              << " verified=" << (report.verified ? "yes" : "no") << '\n';
      for (std::size_t k = 0; k < report.basis.size(); ++k)
        summary << "  basis[" << k << "] = " << report.basis[k].str() << '\n';
      emit(wrapReport(&config, "report", gca::solveReportToJson(report)), outPath,
           summary.str());
    } else if (probe->parsed()) {
      const gca::RunConfig config = loadConfig(configPath, boundFlag);
      const unsigned bound = requireBound(config);
      const gca::ProbeResult result =
          gca::reducibilityProbe(config.ctx, gca::Window{bound});
      std::ostringstream summary;
      summary << "kind=" << gca::kindName(config.ctx.kind()) << " bound=" << bound
              << " verdict=" << result.verdict() << '\n';
      if (result.witness)
        summary << "  witness = " << result.witness->str() << '\n';
      emit(wrapReport(&config, "report", gca::probeToJson(config.ctx, result)),
           outPath, summary.str());
    } else if (verify->parsed()) {
      const gca::Suite suite = gca::runSuite(suiteName);
      std::ostringstream summary;
      int failed = 0;
      for (const gca::CheckResult& c : suite) {
        summary << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " ("
                << c.cases << " cases)";
        if (!c.pass) {
          summary << "  counterexample: " << c.detail;
          ++failed;
        }
        summary << '\n';
      }
      const Json doc =
          wrapReport(nullptr, "report", gca::suiteToJson(suiteName, suite));
      if (outPath.empty()) {
        std::cout << summary.str();
        std::cout << doc.dump(2) << '\n';
      } else {
        emit(doc, outPath, summary.str());
      }
      return failed == 0 ? 0 : 1;
    }
  } catch (const gca::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
