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

#include "pathpart/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathpart {

PathPartition::PathPartition(std::vector<Path> paths) : paths_(std::move(paths)) {
  Vertex max_id = 0;
  for (const auto& path : paths_) {
    for (Vertex v : path) max_id = std::max(max_id, v);
  }
  index_.assign(paths_.empty() ? 0 : max_id + 1, {});
  indexed_.assign(index_.size(), 0);
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    for (std::size_t pos = 0; pos < paths_[i].size(); ++pos) {
      const Vertex v = paths_[i][pos];
      if (!indexed_[v]) {
        indexed_[v] = 1;
        index_[v] = {i, pos};
      }
    }
  }
}

std::optional<PathLocation> PathPartition::locate(Vertex v) const {
  if (v >= index_.size() || !indexed_[v]) return std::nullopt;
  return index_[v];
}

bool PathPartition::is_end(Vertex v) const {
  auto loc = locate(v);
  if (!loc) return false;
  return loc->position == 0 || loc->position + 1 == paths_[loc->path].size();
}

bool PathPartition::is_interior(Vertex v) const {
  auto loc = locate(v);
  return loc && !is_end(v);
}

std::vector<Edge> PathPartition::edges() const {
  std::vector<Edge> out;
  for (const auto& path : paths_) {
    for (std::size_t i = 1; i < path.size(); ++i) out.emplace_back(path[i - 1], path[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate_partition(const Graph& g, const PathPartition& p) {
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < p.path_count(); ++i) {
    const Path& path = p.path(i);
    if (path.empty()) {
      return {Violation::EmptyPath, "path " + std::to_string(i) + " is empty"};
    }
    for (std::size_t pos = 0; pos < path.size(); ++pos) {
      const Vertex v = path[pos];
      if (v >= g.order()) {
        return {Violation::VertexOutOfRange,
                "vertex " + std::to_string(v) + " out of range in path " + std::to_string(i)};
      }
      if (seen[v]) {
        return {Violation::DuplicateVertex, "vertex " + std::to_string(v) + " duplicated"};
      }
      seen[v] = 1;
      if (pos > 0 && !g.has_edge(path[pos - 1], v)) {
        return {Violation::NonEdge, std::to_string(path[pos - 1]) + "-" + std::to_string(v) +
                                        " is not an edge (path " + std::to_string(i) + ")"};
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!seen[v]) return {Violation::MissingVertex, "vertex " + std::to_string(v) + " not covered"};
  }
  return {};
}

PartitionStats stats(const Graph& g, const PathPartition& p,
                     std::optional<std::span<const std::size_t>> subset) {
  if (auto report = validate_partition(g, p); !report.ok()) {
    throw std::invalid_argument("invalid partition: " + report.message);
  }
  std::vector<std::size_t> chosen;
  if (subset) {
    chosen.assign(subset->begin(), subset->end());
  } else {
    for (std::size_t i = 0; i < p.path_count(); ++i) chosen.push_back(i);
  }

  PartitionStats s;
  s.scope = subset ? StatsScope::Prime : StatsScope::Partition;
  for (std::size_t idx : chosen) {
    const Path& path = p.path(idx);
    const std::size_t order = path.size();
    ++s.path_count;
    s.vertex_count += order;
    ++s.order_counts[order];
    s.end_vertices.push_back(path.front());
    if (order > 1) s.end_vertices.push_back(path.back());
    switch (order) {
      case 1: s.singletons.push_back(path.front()); break;
      case 2:
        s.pair_ends.push_back(path.front());
        s.pair_ends.push_back(path.back());
        break;
      case 3: s.centers3.push_back(path[1]); break;
      case 4:
        s.interior4.push_back(path[1]);
        s.interior4.push_back(path[2]);
        break;
      case 5: s.centers5.push_back(path[2]); break;
      default: break;
    }
  }
  for (auto* set : {&s.singletons, &s.pair_ends, &s.centers3, &s.centers5, &s.interior4,
                    &s.end_vertices}) {
    std::sort(set->begin(), set->end());
  }
  return s;
}

Potential potential(const PathPartition& p) {
  Potential pot;
  pot.path_count = p.path_count();
  for (const auto& path : p.paths()) {
    if (path.size() == 1) ++pot.p1;
    if (path.size() == 2) ++pot.p2;
  }
  return pot;
}

namespace {

Vertex lowest_uncovered(const Graph& g, Vertex v, const std::vector<char>& covered) {
  for (Vertex w : g.neighbors(v)) {
    if (!covered[w]) return w;
  }
  return static_cast<Vertex>(g.order());
}

}  // namespace

PathPartition greedy_initial(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<char> covered(n, 0);
  std::vector<Path> paths;
  for (Vertex start = 0; start < n; ++start) {
    if (covered[start]) continue;
    Path path{start};
    covered[start] = 1;
    for (Vertex w = lowest_uncovered(g, path.back(), covered); w < n;
         w = lowest_uncovered(g, path.back(), covered)) {
      path.push_back(w);
      covered[w] = 1;
    }
    Path front;
    for (Vertex w = lowest_uncovered(g, start, covered); w < n;
         w = lowest_uncovered(g, front.back(), covered)) {
      front.push_back(w);
      covered[w] = 1;
    }
    if (!front.empty()) {
      std::reverse(front.begin(), front.end());
      front.insert(front.end(), path.begin(), path.end());
      path = std::move(front);
    }
    paths.push_back(std::move(path));
  }
  return PathPartition(std::move(paths));
}

PathPartition singletons(std::size_t vertex_count) {
  std::vector<Path> paths;
  for (Vertex v = 0; v < vertex_count; ++v) paths.push_back({v});
  return PathPartition(std::move(paths));
}

std::optional<PathPartition> exchange_edges(const Graph& g, const PathPartition& p,
                                            std::span<const std::size_t> touched,
                                            std::span<const Edge> removed,
                                            std::span<const Edge> added) {
  std::vector<std::size_t> touched_sorted(touched.begin(), touched.end());
  std::sort(touched_sorted.begin(), touched_sorted.end());
  touched_sorted.erase(std::unique(touched_sorted.begin(), touched_sorted.end()),
                       touched_sorted.end());

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (std::size_t idx : touched_sorted) {
    if (idx >= p.path_count()) return std::nullopt;
    const Path& path = p.path(idx);
    vertices.insert(vertices.end(), path.begin(), path.end());
    for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(path[i - 1], path[i]);
  }
  std::sort(vertices.begin(), vertices.end());
  std::sort(edges.begin(), edges.end());

  auto in_vertices = [&](Vertex v) {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  };
  for (const Edge& e : removed) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return std::nullopt;
    edges.erase(it);
  }
  for (const Edge& e : added) {
    if (!g.has_edge(e.u, e.v) || !in_vertices(e.u) || !in_vertices(e.v)) return std::nullopt;
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) return std::nullopt;
    edges.insert(it, e);
  }

  // Local adjacency over the touched vertices; every degree must stay <= 2.
  auto local = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                    vertices.begin());
  };
  std::vector<std::vector<Vertex>> adj(vertices.size());
  for (const Edge& e : edges) {
    adj[local(e.u)].push_back(e.v);
    adj[local(e.v)].push_back(e.u);
    if (adj[local(e.u)].size() > 2 || adj[local(e.v)].size() > 2) return std::nullopt;
  }

  std::vector<Path> rebuilt;
  std::vector<char> visited(vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (visited[i] || adj[i].size() == 2) continue;
    Path path{vertices[i]};
    visited[i] = 1;
    Vertex prev = vertices[i];
    Vertex cur = vertices[i];
    while (true) {
      const auto& nbrs = adj[local(cur)];
      Vertex next = cur;
      for (Vertex w : nbrs) {
        if (w != prev && !visited[local(w)]) next = w;
      }
      if (next == cur) break;
      visited[local(next)] = 1;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    if (path.back() < path.front()) std::reverse(path.begin(), path.end());
    rebuilt.push_back(std::move(path));
  }
  if (std::find(visited.begin(), visited.end(), 0) != visited.end()) return std::nullopt;
  std::sort(rebuilt.begin(), rebuilt.end(), [](const Path& a, const Path& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });

  std::vector<Path> paths;
  paths.reserve(p.path_count() - touched_sorted.size() + rebuilt.size());
  for (std::size_t i = 0; i < p.path_count(); ++i) {
    if (!std::binary_search(touched_sorted.begin(), touched_sorted.end(), i)) {
      paths.push_back(p.path(i));
    }
  }
  for (auto& path : rebuilt) paths.push_back(std::move(path));
  return PathPartition(std::move(paths));
}

}  // namespace pathpart
