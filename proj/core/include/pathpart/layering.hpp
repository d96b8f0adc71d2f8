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

#ifndef PATHPART_LAYERING_HPP
#define PATHPART_LAYERING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pathpart/graph.hpp"
#include "pathpart/partition.hpp"

namespace pathpart {

/// Layered growth of end vertices from the short paths of a partition.
///
/// X_1 holds the ends of all paths of order 1 and 2. A path joins X (both of
/// its ends at once) at layer t+1 when one of its interior vertices is a
/// non-path neighbor of X_t. W_1 is the set of non-path neighbors of X_1 and
/// W_{t+1} collects the non-path neighbors first reached from X_{t+1}. Layers
/// are 1-based in the accessors; the vectors are 0-based.
struct Layering {
  std::vector<std::vector<Vertex>> x_layers;  // cumulative, X_1 ⊂ ... ⊂ X_s
  std::vector<std::vector<Vertex>> w_layers;  // disjoint, W_1 .. W_s
  std::vector<Vertex> x_union;
  std::vector<Vertex> w_union;
  std::map<Vertex, Vertex> back_edge;  // w in W_t -> smallest x in X_t \ X_{t-1} adjacent to it
  std::vector<Vertex> good_order;      // W_a
  std::vector<Vertex> bad;             // W_b
  std::vector<std::size_t> prime_paths;  // P': paths with both ends in X

  // Per-vertex / per-path bookkeeping, sized to the partition it was built from.
  std::vector<std::size_t> x_layer_of;      // 0 when not in X
  std::vector<std::size_t> w_layer_of;      // 0 when not in W
  std::vector<std::size_t> path_layer;      // layer at which a path's ends entered X, 0 if never
  std::vector<Vertex> path_parent;          // smallest interior vertex of W_{t-1} for a path entering at t >= 2
  std::uint64_t fingerprint = 0;            // partition the layering was computed for

  std::size_t depth() const noexcept { return x_layers.size(); }
  bool in_x(Vertex v) const { return v < x_layer_of.size() && x_layer_of[v] != 0; }
  bool in_w(Vertex v) const { return v < w_layer_of.size() && w_layer_of[v] != 0; }
};

/// Thrown when a layering or alpha-sequence no longer matches the partition.
class StaleLayering : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Order-sensitive hash of the partition's paths.
std::uint64_t partition_fingerprint(const PathPartition& p);

/// Non-path neighbors of v: neighbors outside v's own path.
std::vector<Vertex> external_neighbors(const Graph& g, const PathPartition& p, Vertex v);

Layering build_layering(const Graph& g, const PathPartition& p);

/// Chain of inter-path edges (x_1,w_1),...,(x_r,w_r) certifying w_r ∈ W_r.
///
/// Orientation: the path of x_1 ends at x_1; the path carrying w_t (t < r)
/// ends at x_{t+1}; the path carrying w_r ends at `host_terminal`.
struct AlphaSequence {
  std::vector<std::pair<Vertex, Vertex>> steps;  // (x_t, w_t)
  Vertex host_terminal = 0;

  std::size_t length() const noexcept { return steps.size(); }
  Vertex last() const { return steps.back().second; }
};

/// Follows back edges from w down to W_1. The path carrying w is oriented
/// towards its stored last vertex. Throws std::invalid_argument if w ∉ W.
AlphaSequence alpha_sequence(const Layering& l, const PathPartition& p, Vertex w);

struct GoodOrderSplit {
  std::vector<Vertex> good;  // W_a
  std::vector<Vertex> bad;   // W_b
};

/// w ∈ W_r is of good order when it is interior to a path whose ends entered X at layer r+1.
GoodOrderSplit classify_good_order(const Graph& g, const PathPartition& p, const Layering& l);

enum class RewireVariant { P1, P2 };

struct EdgeExchange {
  std::vector<Edge> removed;
  std::vector<Edge> added;
  std::vector<std::size_t> touched;  // path indices, sorted
};

/// Edge exchange for P1(w) or P2(w). Throws StaleLayering when the sequence
/// does not fit the partition (non-edges, shared paths, missing successor).
EdgeExchange rewire_exchange(const Graph& g, const PathPartition& p, const AlphaSequence& a,
                             RewireVariant variant);

/// P1 deletes w_t w_t^+ for all t, P2 deletes w_r w_r^- instead of w_r w_r^+;
/// both add every x_t w_t. The path count is preserved.
PathPartition derive_rewired(const Graph& g, const PathPartition& p, const AlphaSequence& a,
                             RewireVariant variant);

/// Orders (i_1, i_2) of [w^+, x] and [x', w^-] on the path of the last w.
std::pair<std::size_t, std::size_t> split_orders(const AlphaSequence& a, const PathPartition& p);

}  // namespace pathpart

#endif  // PATHPART_LAYERING_HPP
