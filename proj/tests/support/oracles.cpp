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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pathpart::testing {
namespace {

bool extend(const Graph& g, std::vector<char>& used, Vertex v, std::size_t depth) {
  if (depth == g.order()) return true;
  for (Vertex u : g.neighbors(v)) {
    if (used[u]) continue;
    used[u] = 1;
    if (extend(g, used, u, depth + 1)) return true;
    used[u] = 0;
  }
  return false;
}

}  // namespace

std::size_t brute_force_mu(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || n > 9) throw std::invalid_argument("brute force needs 1 <= n <= 9");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::size_t best = n;
  do {
    std::size_t paths = 1;
    for (std::size_t i = 1; i < n; ++i) {
      if (!g.has_edge(order[i - 1], order[i])) ++paths;
    }
    best = std::min(best, paths);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool has_hamiltonian_path(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  std::vector<char> used(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    used.assign(n, 0);
    used[s] = 1;
    if (extend(g, used, s, 1)) return true;
  }
  return false;
}

Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> list;
  for (auto [a, b] : edges) list.emplace_back(a, b);
  return Graph(n, list);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(i - 1, i);
  return from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return from_edges(n, e);
}

Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return from_edges(10, e);
}

}  // namespace pathpart::testing
