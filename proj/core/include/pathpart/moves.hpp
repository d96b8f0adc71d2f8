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

#ifndef PATHPART_MOVES_HPP
#define PATHPART_MOVES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pathpart/graph.hpp"
#include "pathpart/layering.hpp"
#include "pathpart/partition.hpp"

namespace pathpart {

/// Rewrite kinds in scan order.
enum class MoveKind { MergeEnds, AbsorbSingleton, AbsorbPairEnd, ChainRewire, TripleMerge, QuadDetach };

std::string_view to_string(MoveKind kind);

/// One improving edge exchange on a partition.
struct Rewrite {
  MoveKind kind = MoveKind::MergeEnds;
  std::vector<Edge> edges_removed;
  std::vector<Edge> edges_added;
  std::vector<std::size_t> paths_touched;  // sorted path indices
  Potential after;                         // potential of the rewritten partition

  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

class MoveNotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every strictly improving rewrite, ordered by kind and then by the
/// (added, removed) edge lists. Throws StaleLayering if `l` was built for a
/// different partition.
std::vector<Rewrite> enumerate_moves(const Graph& g, const PathPartition& p, const Layering& l);

/// First rewrite of enumerate_moves, computed without materializing later kinds.
std::optional<Rewrite> first_move(const Graph& g, const PathPartition& p, const Layering& l);

/// Throws MoveNotApplicable unless the rewrite still applies and lowers the potential.
PathPartition apply(const Graph& g, const PathPartition& p, const Rewrite& m);

struct TraceStep {
  Rewrite move;
  Potential before;
  Potential after;
};

struct SearchTrace {
  std::vector<TraceStep> steps;
  std::size_t iterations = 0;
  bool fixpoint_reached = false;
};

struct SearchResult {
  PathPartition partition;
  SearchTrace trace;
};

/// Default step budget: 10 n.
std::size_t default_max_steps(const Graph& g);

/// First-improvement descent on the potential until no rewrite applies or
/// `max_steps` moves were accepted. The layering is rebuilt after every move.
SearchResult local_search(const Graph& g, const PathPartition& start, std::size_t max_steps);
SearchResult local_search(const Graph& g, const PathPartition& start);

struct ClaimCheck {
  std::string name;  // C1a, C1b, C2a, C2b, C3
  bool passed = true;
  std::string detail;  // first counterexample when failed
};

/// Structural claims that hold at every fixpoint of the move catalog.
struct ClaimReport {
  bool fixpoint = false;
  bool min_degree_ok = false;  // delta >= 2
  bool short_paths_absent = false;  // p1 + p2 = 0: every path has order >= 3, so |P| <= n/3
  bool x_w_disjoint = true;
  std::vector<ClaimCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return x_w_disjoint;
  }
};

ClaimReport assert_fixpoint_claims(const Graph& g, const PathPartition& p, const Layering& l);

}  // namespace pathpart

#endif  // PATHPART_MOVES_HPP
