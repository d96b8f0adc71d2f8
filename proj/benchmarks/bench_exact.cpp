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

#include "pathpart/exact.hpp"
#include "pathpart/generators.hpp"

namespace {

using namespace pathpart;

void BM_ExactRandomBounded(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_bounded(n, 2, 5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_mu(g).mu);
}
BENCHMARK(BM_ExactRandomBounded)->DenseRange(8, 18, 2)->Unit(benchmark::kMillisecond);

void BM_ExactCubic(benchmark::State& state) {
  const Graph g = random_cubic(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_mu(g).mu);
}
BENCHMARK(BM_ExactCubic)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

}  // namespace
