/*
Copyright 2026 The pathpart Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "pathpart/generators.hpp"
#include "pathpart/moves.hpp"
#include "pathpart/partition.hpp"

namespace {

using namespace pathpart;

void BM_LocalSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_bounded(n, 2, 6, 11);
  const PathPartition start = greedy_initial(g);
  std::size_t steps = 0;
  for (auto _ : state) {
    const SearchResult r = local_search(g, start);
    steps = r.trace.steps.size();
    benchmark::DoNotOptimize(r.partition.path_count());
  }
  state.counters["moves"] = static_cast<double>(steps);
}
BENCHMARK(BM_LocalSearch)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_Greedy(benchmark::State& state) {
  const Graph g = random_bounded(static_cast<std::size_t>(state.range(0)), 2, 6, 11);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_initial(g).path_count());
}
BENCHMARK(BM_Greedy)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

}  // namespace
