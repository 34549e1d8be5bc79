#include <benchmark/benchmark.h>

#include <random>

#include "gca/solver.hpp"

namespace {

using namespace gca;

const WhittakerHom kPhi{makeRational(1), makeRational(-1), makeRational(2),
                        makeRational(3), makeRational(5)};
const Xi kXi{makeRational(1), makeRational(0), makeRational(2)};

void BM_bracketGen(benchmark::State& state) {
  const GeneratorId a = GeneratorId::modal(Family::L, 3);
  const GeneratorId b = GeneratorId::modal(Family::L, -3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracketGen(AlgebraKind::Central, a, b));
  }
}
BENCHMARK(BM_bracketGen);

void BM_straightenRandomWord(benchmark::State& state) {
  const ModuleCtx ctx = ModuleCtx::make(ModuleKind::UniversalCentral, kPhi);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> mode(-4, 4);
  std::uniform_int_distribution<int> fam(0, 3);
  std::vector<Word> words;
  for (int t = 0; t < 64; ++t) {
    Word w;
    for (int k = 0; k < int(state.range(0)); ++k)
      w.push_back(GeneratorId::modal(static_cast<Family>(fam(rng)), mode(rng)));
    words.push_back(std::move(w));
  }
  std::size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(actWord(ctx, words[next]));
    next = (next + 1) % words.size();
  }
}
BENCHMARK(BM_straightenRandomWord)->Arg(3)->Arg(5)->Arg(7);

void BM_enumerateWindow(benchmark::State& state) {
  const ModuleCtx ctx = ModuleCtx::make(ModuleKind::UniversalCentral, kPhi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerateWindow(ctx, Window{unsigned(state.range(0))}));
  }
}
BENCHMARK(BM_enumerateWindow)->Arg(3)->Arg(4);

void BM_whittakerSolveGeneric(benchmark::State& state) {
  const ModuleCtx ctx = ModuleCtx::make(ModuleKind::Generic, kPhi, kXi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        whittakerSolve(ctx, Window{unsigned(state.range(0))}, kPhi));
  }
}
BENCHMARK(BM_whittakerSolveGeneric)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_reducibilityProbeQuotient(benchmark::State& state) {
  const WhittakerHom phi{makeRational(1), makeRational(-1), makeRational(0),
                         makeRational(0), makeRational(0)};
  const Xi xi{makeRational(1), makeRational(3), makeRational(0)};
  const ModuleCtx ctx =
      ModuleCtx::make(ModuleKind::QuotientOmegaTilde, phi, xi, makeRational(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reducibilityProbe(ctx, Window{2}));
  }
}
BENCHMARK(BM_reducibilityProbeQuotient)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
