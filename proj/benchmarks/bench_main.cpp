#include <benchmark/benchmark.h>

#include <random>

#include "logitlab/bounds.hpp"
#include "logitlab/coupling.hpp"
#include "logitlab/exact.hpp"
#include "logitlab/generators.hpp"
#include "logitlab/metrics.hpp"

using namespace logitlab;

namespace {

Game ring(int n) { return gen_graphical_coordination(SocialGraph::ring(n), {1, 1, 0, 0}); }

}  // namespace

static void BM_TransitionMatrix(benchmark::State& state) {
  const Game g = ring(static_cast<int>(state.range(0)));
  const LogitChain chain(g, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(transition_matrix(chain));
  state.SetComplexityN(static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_TransitionMatrix)->DenseRange(4, 10, 2)->Complexity();

static void BM_ExactMixingTime(benchmark::State& state) {
  const Game g = ring(static_cast<int>(state.range(0)));
  const TransitionMatrix p = transition_matrix(LogitChain(g, 1.0));
  const Distribution pi = gibbs(*g.potential(), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(exact_mixing_time(p, pi));
}
BENCHMARK(BM_ExactMixingTime)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_MixingBySquaring(benchmark::State& state) {
  const Game g = gen_lbpot(4, 2, 1);
  const double beta = static_cast<double>(state.range(0));
  const TransitionMatrix p = transition_matrix(LogitChain(g, beta));
  const Distribution pi = gibbs(*g.potential(), beta);
  for (auto _ : state) benchmark::DoNotOptimize(mixing_time_by_squaring(p, pi, 0.25, std::size_t{1} << 40));
}
BENCHMARK(BM_MixingBySquaring)->Arg(2)->Arg(6)->Arg(10);

static void BM_Spectrum(benchmark::State& state) {
  const Game g = ring(static_cast<int>(state.range(0)));
  const TransitionMatrix p = transition_matrix(LogitChain(g, 1.0));
  const Distribution pi = gibbs(*g.potential(), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(p, pi));
}
BENCHMARK(BM_Spectrum)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Zeta(benchmark::State& state) {
  const Game g = gen_random_potential(static_cast<int>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(zeta(*g.potential(), g.space()));
  state.SetComplexityN(static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_Zeta)->DenseRange(8, 16, 4)->Complexity();

static void BM_Cutwidth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::vector<SocialGraph::Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng() % 3 == 0) edges.emplace_back(a, b);
    }
  }
  const SocialGraph graph(n, edges);
  for (auto _ : state) benchmark::DoNotOptimize(cutwidth(graph));
}
BENCHMARK(BM_Cutwidth)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_CoupledStep(benchmark::State& state) {
  const Game g = ring(16);
  const LogitChain chain(g, 1.0);
  SplitMix64 rng(1);
  StateIndex x = 0, y = g.size() - 1;
  for (auto _ : state) {
    auto next = coupled_step(chain, x, y, rng);
    // Restart from the extremes once the copies meet.
    if (next.first == next.second) next = {0, g.size() - 1};
    x = next.first;
    y = next.second;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_CoupledStep);

static void BM_TheoryReport(benchmark::State& state) {
  const Game g = gen_lbpot(4, 2, 1);
  const StructureMetrics metrics = structure_metrics(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(theory_report(g, 2.0, 0.25, metrics, exact_quantities(g, 2.0)));
  }
}
BENCHMARK(BM_TheoryReport)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
