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

#include "pathpart/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathpart {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= vertex_count) {
      throw GraphError("edge endpoint " + std::to_string(e.v) +
                       " out of range for n = " + std::to_string(vertex_count));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  std::size_t twice = 0;
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice += nbrs.size();
  }
  edge_count_ = twice / 2;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("degree profile of an empty graph");
  DegreeProfile p{g.degree(0), g.degree(0)};
  for (Vertex v = 1; v < g.order(); ++v) {
    p.min_degree = std::min(p.min_degree, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  return p;
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : set) {
    if (v >= g.order()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

std::size_t external_edge_count(const Graph& g, std::span<const Vertex> a,
                                std::span<const Vertex> b) {
  const auto in_a = membership(g, a);
  const auto in_b = membership(g, b);
  std::size_t count = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      if ((in_a[u] && in_b[v]) || (in_a[v] && in_b[u])) ++count;
    }
  }
  return count;
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  auto edges = first.edges();
  const auto shift = static_cast<Vertex>(first.order());
  for (const Edge& e : second.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(first.order() + second.order(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> relabel(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) relabel.at(vertices[i]) = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (relabel[w] > static_cast<std::int64_t>(i)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(relabel[w]));
      }
    }
  }
  return Graph(vertices.size(), edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && connected_components(g).size() == 1;
}

bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  // Iterative Tarjan low-link from vertex 0.
  const std::size_t n = g.order();
  std::vector<std::size_t> disc(n, 0), low(n, 0), next_edge(n, 0);
  std::vector<std::int64_t> parent(n, -1);
  std::size_t timer = 0, root_children = 0;
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = ++timer;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto nbrs = g.neighbors(v);
    if (next_edge[v] < nbrs.size()) {
      const Vertex w = nbrs[next_edge[v]++];
      if (disc[w] == 0) {
        parent[w] = v;
        disc[w] = low[w] = ++timer;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (static_cast<std::int64_t>(w) != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (parent[v] >= 0) {
      const auto p = static_cast<Vertex>(parent[v]);
      low[p] = std::min(low[p], low[v]);
      if (p != 0 && low[v] >= disc[p]) return false;
    }
  }
  return root_children <= 1;
}

}  // namespace pathpart
