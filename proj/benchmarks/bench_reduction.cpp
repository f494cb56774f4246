#include <benchmark/benchmark.h>

#include "dcsp/generate.hpp"
#include "dcsp/traceback.hpp"

namespace {

using namespace dcsp;

Word make_word(int length, int rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Word w;
  w.reserve(length);
  for (int k = 0; k < length; ++k) {
    int idx = 1 + static_cast<int>(uniform_below(rng, rank));
    w.push_back(uniform_below(rng, 2) ? idx : -idx);
  }
  return w;
}

void BM_NormalForm(benchmark::State& state) {
  GroupSpec spec{10};
  Word w = make_word(static_cast<int>(state.range(0)), spec.rank, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(w, spec));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormalForm)->Range(64, 4096)->Complexity();

void BM_PseudoNormalForm(benchmark::State& state) {
  GroupSpec spec{10};
  Word w = make_word(static_cast<int>(state.range(0)), spec.rank, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pseudo_normal_form(w, spec));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PseudoNormalForm)->Range(64, 4096)->Complexity();

void BM_Cost(benchmark::State& state) {
  InstanceSpec spec;
  spec.rank = 10;
  spec.l_a = static_cast<int>(state.range(0));
  spec.l_x = spec.l_y = 16;
  spec.seed = 7;
  GeneratedInstance g = generate(spec);
  Chromosome c{make_word(8, 4, 3), Word{}};
  for (int& v : c.zeta) (void)v;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cost(g.instance, c));
  }
}
BENCHMARK(BM_Cost)->Range(128, 2048);

void BM_TracebackEvaluate(benchmark::State& state) {
  InstanceSpec spec;
  spec.rank = 10;
  spec.l_a = static_cast<int>(state.range(0));
  spec.l_x = spec.l_y = 16;
  spec.seed = 7;
  GeneratedInstance g = generate(spec);
  Chromosome c{make_word(8, 4, 3), Word{}};
  RngDecisionSource ds(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(g.instance, c, ds));
  }
}
BENCHMARK(BM_TracebackEvaluate)->Range(128, 2048);

}  // namespace

BENCHMARK_MAIN();
