// Copyright 2026 The Inset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial references against the OpenMP kernels, and the incremental sweep
// against per-pair recomputation.

#include <vector>

#include "benchmark/benchmark.h"
#include "inset/bounds.hpp"
#include "inset/randgen.hpp"
#include "inset/search.hpp"
#include "inset/sweep.hpp"

namespace inset {
namespace {

Tree path_of(Vertex n) {
  std::vector<VertexPair> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Tree::from_edges(n, edges);
}

void BM_BestEdgeSerial(benchmark::State& state) {
  const Tree t = random_labeled_tree(static_cast<Vertex>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_edge_serial(t, Strategy::kExhaustive));
  }
}
BENCHMARK(BM_BestEdgeSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_BestEdgeParallel(benchmark::State& state) {
  const Tree t = random_labeled_tree(static_cast<Vertex>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_edge(t, Strategy::kExhaustive));
  }
}
BENCHMARK(BM_BestEdgeParallel)
    ->Arg(100)
    ->Arg(300)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_ScanAllTreesSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        scan_all_trees_serial(static_cast<Vertex>(state.range(0))));
  }
}
BENCHMARK(BM_ScanAllTreesSerial)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ScanAllTreesParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_all_trees(static_cast<Vertex>(state.range(0))));
  }
}
BENCHMARK(BM_ScanAllTreesParallel)
    ->Arg(7)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_SweepPath(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Tree t = path_of(n);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_path(t, 0, n - 1));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SweepPath)
    ->RangeMultiplier(2)
    ->Range(256, 4096)
    ->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

void BM_RecomputePath(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Tree t = path_of(n);
  for (auto _ : state) benchmark::DoNotOptimize(recompute_path(t, 0, n - 1));
  state.SetComplexityN(n);
}
BENCHMARK(BM_RecomputePath)
    ->RangeMultiplier(2)
    ->Range(256, 1024)
    ->Complexity(benchmark::oNCubed)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace inset

BENCHMARK_MAIN();
