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

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pathpart/exact.hpp"
#include "pathpart/generators.hpp"
#include "pathpart/moves.hpp"
#include "violations.hpp"

using namespace pathpart;
using pathpart::testing::from_edges;

namespace {

std::vector<Rewrite> moves_of(const Graph& g, const PathPartition& p) {
  return enumerate_moves(g, p, build_layering(g, p));
}

bool has_kind(const std::vector<Rewrite>& moves, MoveKind kind) {
  return std::any_of(moves.begin(), moves.end(), [&](const Rewrite& m) { return m.kind == kind; });
}

}  // namespace

TEST_CASE("merge of two adjacent ends") {
  const Graph g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const PathPartition p({{0, 1}, {2, 3}});
  const auto moves = moves_of(g, p);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].kind == MoveKind::MergeEnds);
  CHECK(moves[0].edges_added == std::vector<Edge>{Edge(1, 2)});
  CHECK(potential(p) == Potential{2, 0, 2});
  const PathPartition q = apply(g, p, moves[0]);
  CHECK(q == PathPartition({{0, 1, 2, 3}}));
  CHECK(potential(q) == Potential{1, 0, 0});
}

TEST_CASE("singleton absorbed next to a 4-path interior") {
  const Graph g = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  const PathPartition p({{0, 1, 2, 3}, {4}});
  const auto m = first_move(g, p, build_layering(g, p));
  REQUIRE(m.has_value());
  CHECK(m->kind == MoveKind::AbsorbSingleton);
  CHECK(m->after < potential(p));
  CHECK(potential(apply(g, p, *m)) == m->after);
}

TEST_CASE("pair end absorbed into a long path") {
  const Graph g = from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {7, 2}});
  const PathPartition p({{0, 1, 2, 3, 4, 5}, {6, 7}});
  const auto moves = moves_of(g, p);
  CHECK(has_kind(moves, MoveKind::AbsorbPairEnd));
  for (const auto& m : moves) CHECK(m.after < potential(p));
}

TEST_CASE("pair end split leaves no short path") {
  // 0-1 is a pair, 1 sees the center of 2-3-4-5-6-7; splitting there leaves
  // [0,1,4,3,2] and [5,6,7].
  const Graph g = from_edges(8, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 4}});
  const PathPartition p({{0, 1}, {2, 3, 4, 5, 6, 7}});
  const auto moves = moves_of(g, p);
  REQUIRE_FALSE(moves.empty());
  const PathPartition q = apply(g, p, moves.front());
  CHECK(potential(q) == Potential{2, 0, 0});
}

TEST_CASE("triple merge on a late W vertex") {
  const auto cases = pathpart::testing::claim_violations();
  const auto it = std::find_if(cases.begin(), cases.end(), [](const auto& c) { return c.claim == "C2b"; });
  REQUIRE(it != cases.end());
  const Layering l = build_layering(it->graph, it->partition);
  CHECK_FALSE(l.bad.empty());
  const auto moves = enumerate_moves(it->graph, it->partition, l);
  REQUIRE(has_kind(moves, MoveKind::TripleMerge));
  for (const auto& m : moves) {
    if (m.kind != MoveKind::TripleMerge) continue;
    const PathPartition q = apply(it->graph, it->partition, m);
    CHECK(q.path_count() == 2);
    CHECK(validate_partition(it->graph, q).ok());
  }
}

TEST_CASE("quad detach splits a 4-path between two ends") {
  // Pairs 0-1 and 2-3; 4-path 4-5-6-7 with 1~5 and 3~6.
  const Graph g = from_edges(8, {{0, 1}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {1, 5}, {3, 6}});
  const PathPartition p({{0, 1}, {2, 3}, {4, 5, 6, 7}});
  const auto moves = moves_of(g, p);
  REQUIRE(has_kind(moves, MoveKind::QuadDetach));
  for (const auto& m : moves) {
    if (m.kind != MoveKind::QuadDetach) continue;
    CHECK(m.edges_removed == std::vector<Edge>{Edge(5, 6)});
    const PathPartition q = apply(g, p, m);
    CHECK(q.path_count() == 2);
    CHECK(validate_partition(g, q).ok());
  }
}

TEST_CASE("candidate lists are ordered by kind") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_bounded(12, 2, 5, seed);
    const PathPartition p = singletons(g.order());
    const auto moves = moves_of(g, p);
    for (std::size_t i = 1; i < moves.size(); ++i) {
      CHECK(static_cast<int>(moves[i - 1].kind) <= static_cast<int>(moves[i].kind));
    }
    for (const auto& m : moves) CHECK(m.after < potential(p));
    const auto first = first_move(g, p, build_layering(g, p));
    CHECK(first.has_value() == !moves.empty());
    if (first) CHECK(*first == moves.front());
  }
}

TEST_CASE("apply rejects stale rewrites") {
  const Graph g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const PathPartition p({{0, 1}, {2, 3}});
  const Rewrite m = moves_of(g, p).front();
  const PathPartition merged = apply(g, p, m);
  CHECK_THROWS_AS(apply(g, merged, m), MoveNotApplicable);
}

TEST_CASE("moves reject a stale layering") {
  const Graph g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const Layering l = build_layering(g, PathPartition({{0, 1, 2, 3}}));
  CHECK_THROWS_AS(enumerate_moves(g, PathPartition({{0, 1}, {2, 3}}), l), StaleLayering);
}

TEST_CASE("local search examples") {
  SUBCASE("path graph is already a fixpoint") {
    const Graph g = pathpart::testing::path_graph(7);
    const SearchResult r = local_search(g, greedy_initial(g));
    CHECK(r.trace.fixpoint_reached);
    CHECK(r.trace.steps.empty());
    CHECK(r.partition.path_count() == 1);
  }
  SUBCASE("K4 from singletons") {
    const Graph g = pathpart::testing::complete_graph(4);
    const SearchResult r = local_search(g, singletons(4));
    CHECK(r.trace.fixpoint_reached);
    CHECK(r.partition.path_count() == 1);
  }
  SUBCASE("disjoint K_{2,4} copies") {
    const Graph g = bipartite_copies(2, 4, 3);
    for (const PathPartition& start : {greedy_initial(g), singletons(g.order())}) {
      const SearchResult r = local_search(g, start);
      CHECK(r.trace.fixpoint_reached);
      CHECK(r.partition.path_count() == 6);
    }
  }
  SUBCASE("step budget") {
    const Graph g = pathpart::testing::complete_graph(5);
    const SearchResult r = local_search(g, singletons(5), 1);
    CHECK(r.trace.steps.size() == 1);
    CHECK_FALSE(r.trace.fixpoint_reached);
  }
  CHECK_THROWS_AS(local_search(pathpart::testing::path_graph(3), PathPartition({{0, 2}, {1}})),
                  std::invalid_argument);
}

TEST_CASE("local search properties on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_bounded(13, 2, 6, seed);
    const PathPartition start = seed % 2 ? greedy_initial(g) : singletons(g.order());
    const SearchResult r = local_search(g, start);
    CHECK(r.trace.fixpoint_reached);
    CHECK(validate_partition(g, r.partition).ok());
    CHECK(r.trace.steps.size() <= 3 * g.order());
    Potential current = potential(start);
    for (const auto& step : r.trace.steps) {
      CHECK(step.before == current);
      CHECK(step.after < step.before);
      current = step.after;
    }
    CHECK(current == potential(r.partition));
    CHECK(r.partition.path_count() >= exact_mu(g).mu);
    CHECK(r.partition.path_count() <= start.path_count());
  }
}

TEST_CASE("fixpoint claims hold on random fixpoints") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_bounded(14, 2, 7, seed);
    const SearchResult r = local_search(g, greedy_initial(g));
    const Layering l = build_layering(g, r.partition);
    const ClaimReport report = assert_fixpoint_claims(g, r.partition, l);
    CHECK(report.fixpoint);
    CHECK(report.min_degree_ok);
    for (const auto& c : report.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.passed);
    }
    CHECK(report.all_passed());
    CHECK(moves_of(g, r.partition).empty());
  }
}

TEST_CASE("claim-violating partitions admit a move") {
  for (const auto& v : pathpart::testing::claim_violations()) {
    INFO(v.claim << ": " << v.description);
    REQUIRE(validate_partition(v.graph, v.partition).ok());
    const Layering l = build_layering(v.graph, v.partition);
    const ClaimReport report = assert_fixpoint_claims(v.graph, v.partition, l);
    CHECK_FALSE(report.fixpoint);
    const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                 [&](const ClaimCheck& c) { return c.name == v.claim; });
    REQUIRE(it != report.checks.end());
    CHECK_FALSE(it->passed);
    CHECK_FALSE(enumerate_moves(v.graph, v.partition, l).empty());
  }
}

TEST_CASE("short-path-free fixpoints take the n/3 branch") {
  const Graph g = pathpart::testing::cycle_graph(6);
  const PathPartition p({{0, 1, 2, 3, 4, 5}});
  const ClaimReport report = assert_fixpoint_claims(g, p, build_layering(g, p));
  CHECK(report.fixpoint);
  CHECK(report.short_paths_absent);
  CHECK(report.all_passed());
}
