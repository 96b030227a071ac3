#include <benchmark/benchmark.h>

#include "nrwalk/bounds.hpp"
#include "nrwalk/entropy.hpp"
#include "nrwalk/generators.hpp"
#include "nrwalk/graph.hpp"
#include "nrwalk/walk_counts.hpp"

namespace {

using namespace nrw;

// A mid-sized irregular benchmark instance: circulant-style ring with two
// chord lengths, min degree 4.
Graph ring_with_chords(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    const int j = (i + n / 3) % n;
    if (i < j) edges.push_back({i, j});
    const int k = (i + n / 7) % n;
    if (i < k) edges.push_back({i, k});
  }
  return Graph::from_edges(n, edges);
}

void BM_CountTable(benchmark::State& state) {
  const Graph g = ring_with_chords(static_cast<int>(state.range(0)));
  const ArcSpace arcs(g);
  for (auto _ : state) {
    auto table = count_table(arcs, 12);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_CountTable)->Arg(64)->Arg(256)->Arg(1024);

void BM_Girth(benchmark::State& state) {
  const Graph g = ring_with_chords(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto value = girth(g);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_Girth)->Arg(64)->Arg(256)->Arg(1024);

void BM_ProcessMarginals(benchmark::State& state) {
  const Graph g = ring_with_chords(static_cast<int>(state.range(0)));
  const ArcSpace arcs(g);
  for (auto _ : state) {
    auto pm = process_marginals(arcs, 8, StartMode::kArcUniform);
    benchmark::DoNotOptimize(pm);
  }
}
BENCHMARK(BM_ProcessMarginals)->Arg(64)->Arg(256);

void BM_EntropyChain(benchmark::State& state) {
  const Graph g = ring_with_chords(static_cast<int>(state.range(0)));
  const ArcSpace arcs(g);
  const auto counts = count_table(arcs, 8);
  for (auto _ : state) {
    auto audit =
        conditional_entropy_chain(arcs, counts, 8, StartMode::kVertexPi);
    benchmark::DoNotOptimize(audit);
  }
}
BENCHMARK(BM_EntropyChain)->Arg(64)->Arg(256);

void BM_AuditGraph(benchmark::State& state) {
  const Graph g = ring_with_chords(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = audit_graph(g, "bench");
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_AuditGraph)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
