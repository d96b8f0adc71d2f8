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

#ifndef PATHPART_GRAPH_HPP
#define PATHPART_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathpart {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for malformed graph input. `line()` is 1-based, 0 when not tied to a line.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Adjacency lists are sorted and duplicate-free; the graph never changes
/// after construction, so a `const Graph&` can be shared freely.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Builds a graph from an edge list. Repeated edges collapse; self-loops
  /// and endpoints >= vertex_count throw GraphError.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

DegreeProfile degree_profile(const Graph& g);

/// Number of edges uv with u in `a` and v in `b`. An edge with both ends in
/// a ∩ b is counted once.
std::size_t external_edge_count(const Graph& g, std::span<const Vertex> a,
                                std::span<const Vertex> b);

/// Disjoint union; vertices of `second` are shifted by first.order().
Graph disjoint_union(const Graph& first, const Graph& second);

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Connected, at least three vertices and no articulation point.
bool is_biconnected(const Graph& g);

}  // namespace pathpart

#endif  // PATHPART_GRAPH_HPP
