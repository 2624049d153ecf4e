#include <benchmark/benchmark.h>

#include <random>

#include "doodle/census.hpp"
#include "doodle/invariant.hpp"
#include "doodle/moves.hpp"
#include "doodle/quiver.hpp"

namespace {

using namespace doodle;

ArrowDiagram reduced_core() { return parse_gauss("1t 2t 1h 3t 2h 4t 3h 4h"); }

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937 rng(1);
  std::vector<ArrowDiagram> pool;
  for (int i = 0; i < 64; ++i)
    pool.push_back(random_arrow_diagram(rng, static_cast<int>(state.range(0))));
  size_t i = 0;
  for (auto _ : state) {
    const auto& d = pool[i++ % pool.size()];
    benchmark::DoNotOptimize(ArrowDiagram(rotated(d.endpoints(), 3)));
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(12);

void BM_IsRealizable(benchmark::State& state) {
  std::mt19937 rng(2);
  std::vector<ArrowDiagram> pool;
  for (int i = 0; i < 64; ++i)
    pool.push_back(random_arrow_diagram(rng, static_cast<int>(state.range(0))));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_realizable(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_IsRealizable)->Arg(6)->Arg(12);

void BM_Minimize(benchmark::State& state) {
  std::mt19937 rng(3);
  std::vector<ArrowDiagram> pool;
  for (int i = 0; i < 64; ++i)
    pool.push_back(random_realizable_diagram(rng, static_cast<int>(state.range(0))));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_Minimize)->Arg(6)->Arg(10);

void BM_Reduce(benchmark::State& state) {
  std::mt19937 rng(4);
  std::vector<QuiverDiagram> pool;
  for (int i = 0; i < 64; ++i) {
    ArrowDiagram d = random_arrow_diagram(rng, static_cast<int>(state.range(0)));
    pool.push_back(from_arrow(d));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_Reduce)->Arg(6)->Arg(10);

void BM_DiagramInvariant(benchmark::State& state) {
  ArrowDiagram d = reduced_core();
  std::mt19937 rng(5);
  for (int i = 0; i < 3; ++i) d = random_walk(d, rng, {2, 10}).first;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagram_invariant<Rational>(d, n));
  }
}
BENCHMARK(BM_DiagramInvariant)->Arg(4)->Arg(6);

void BM_Enumerate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_arrow_diagrams(k));
  }
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
