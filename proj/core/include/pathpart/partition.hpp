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

#ifndef PATHPART_PARTITION_HPP
#define PATHPART_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathpart/graph.hpp"

namespace pathpart {

/// Ordered vertex sequence; consecutive vertices must be adjacent in the host graph.
using Path = std::vector<Vertex>;

struct PathLocation {
  std::size_t path = 0;
  std::size_t position = 0;
};

/// A list of paths meant to cover every vertex exactly once.
///
/// The container accepts arbitrary content so that `validate_partition` can
/// diagnose it; every other operation assumes a valid partition. The stored
/// orientation of each path is fixed but carries no meaning.
class PathPartition {
 public:
  PathPartition() = default;
  explicit PathPartition(std::vector<Path> paths);

  std::span<const Path> paths() const noexcept { return paths_; }
  const Path& path(std::size_t i) const { return paths_.at(i); }
  std::size_t path_count() const noexcept { return paths_.size(); }

  /// Location of the first occurrence of v, if any.
  std::optional<PathLocation> locate(Vertex v) const;
  std::size_t path_of(Vertex v) const { return locate(v).value().path; }

  bool is_end(Vertex v) const;
  bool is_interior(Vertex v) const;

  /// Path edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const PathPartition& a, const PathPartition& b) {
    return a.paths_ == b.paths_;
  }

 private:
  std::vector<Path> paths_;
  std::vector<PathLocation> index_;
  std::vector<char> indexed_;
};

enum class Violation { None, EmptyPath, VertexOutOfRange, DuplicateVertex, NonEdge, MissingVertex };

struct ValidationReport {
  Violation violation = Violation::None;
  std::string message;

  bool ok() const noexcept { return violation == Violation::None; }
};

/// Reports the first violated invariant, scanning paths in order.
ValidationReport validate_partition(const Graph& g, const PathPartition& p);

/// Which family of paths a statistics record describes.
enum class StatsScope { Partition, Prime };

/// Path-order statistics. Vertex sets are sorted.
struct PartitionStats {
  StatsScope scope = StatsScope::Partition;
  std::size_t path_count = 0;
  std::size_t vertex_count = 0;
  std::map<std::size_t, std::size_t> order_counts;  // i -> p_i, zero entries omitted
  std::vector<Vertex> singletons;                   // V1
  std::vector<Vertex> pair_ends;                    // V2
  std::vector<Vertex> centers3;                     // C3
  std::vector<Vertex> centers5;                     // C5
  std::vector<Vertex> interior4;                    // Int(R4)
  std::vector<Vertex> end_vertices;                 // End(P)
  std::optional<std::size_t> p4_one_w;              // p'_4, set once W is known
  std::optional<std::size_t> p4_two_w;              // p''_4

  std::size_t count(std::size_t order) const {
    auto it = order_counts.find(order);
    return it == order_counts.end() ? 0 : it->second;
  }
};

/// Statistics over all paths, or over `subset` (path indices) when given.
/// Throws std::invalid_argument for an invalid partition.
PartitionStats stats(const Graph& g, const PathPartition& p,
                     std::optional<std::span<const std::size_t>> subset = std::nullopt);

/// Lexicographic extremal ordering: fewer paths, then fewer singletons, then fewer 2-paths.
struct Potential {
  std::size_t path_count = 0;
  std::size_t p1 = 0;
  std::size_t p2 = 0;

  friend auto operator<=>(const Potential&, const Potential&) = default;
};

Potential potential(const PathPartition& p);

/// Deterministic maximal path stripping from the lowest uncovered vertex.
PathPartition greedy_initial(const Graph& g);

/// One singleton path per vertex.
PathPartition singletons(std::size_t vertex_count);

/// Reassembles the vertices of `touched` paths after an edge exchange.
///
/// Paths not listed in `touched` keep their position and orientation; the
/// rebuilt components follow them, ordered by smallest vertex and oriented
/// from their smaller end. Returns nullopt if the exchange leaves a vertex of
/// degree three, a cycle, or refers to edges not in the expected state.
std::optional<PathPartition> exchange_edges(const Graph& g, const PathPartition& p,
                                            std::span<const std::size_t> touched,
                                            std::span<const Edge> removed,
                                            std::span<const Edge> added);

}  // namespace pathpart

#endif  // PATHPART_PARTITION_HPP
