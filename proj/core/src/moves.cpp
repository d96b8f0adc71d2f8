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

#include "pathpart/moves.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iterator>
#include <tuple>

namespace pathpart {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::MergeEnds: return "MergeEnds";
    case MoveKind::AbsorbSingleton: return "AbsorbSingleton";
    case MoveKind::AbsorbPairEnd: return "AbsorbPairEnd";
    case MoveKind::ChainRewire: return "ChainRewire";
    case MoveKind::TripleMerge: return "TripleMerge";
    case MoveKind::QuadDetach: return "QuadDetach";
  }
  return "?";
}

namespace {

constexpr std::array kKinds{MoveKind::MergeEnds,   MoveKind::AbsorbSingleton,
                            MoveKind::AbsorbPairEnd, MoveKind::ChainRewire,
                            MoveKind::TripleMerge, MoveKind::QuadDetach};

class Scanner {
 public:
  Scanner(const Graph& g, const PathPartition& p, const Layering& l)
      : g_(g), p_(p), l_(l), base_(potential(p)) {
    if (l.fingerprint != partition_fingerprint(p)) {
      throw StaleLayering("layering was built for a different partition");
    }
  }

  std::vector<Rewrite> scan(MoveKind kind) {
    out_.clear();
    switch (kind) {
      case MoveKind::MergeEnds: merge_ends(); break;
      case MoveKind::AbsorbSingleton: absorb(1, kind); break;
      case MoveKind::AbsorbPairEnd: absorb(2, kind); break;
      case MoveKind::ChainRewire: chain_rewire(); break;
      case MoveKind::TripleMerge: triple_merge(); break;
      case MoveKind::QuadDetach:
        quad_detach();
        rotate_into_end();
        break;
    }
    std::sort(out_.begin(), out_.end(), [](const Rewrite& a, const Rewrite& b) {
      return std::tie(a.edges_added, a.edges_removed) < std::tie(b.edges_added, b.edges_removed);
    });
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return std::move(out_);
  }

 private:
  void offer(MoveKind kind, std::vector<std::size_t> touched, std::vector<Edge> removed,
             std::vector<Edge> added) {
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::sort(removed.begin(), removed.end());
    std::sort(added.begin(), added.end());
    auto result = exchange_edges(g_, p_, touched, removed, added);
    if (!result) return;
    const Potential after = potential(*result);
    if (!(after < base_)) return;
    out_.push_back({kind, std::move(removed), std::move(added), std::move(touched), after});
  }

  std::vector<Vertex> ends(const Path& path) const {
    if (path.size() == 1) return {path.front()};
    return {path.front(), path.back()};
  }

  std::vector<Vertex> x_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex x : external_neighbors(g_, p_, v)) {
      if (l_.in_x(x)) out.push_back(x);
    }
    return out;
  }

  // Two ends of distinct paths joined by an edge.
  void merge_ends() {
    for (std::size_t i = 0; i < p_.path_count(); ++i) {
      for (Vertex a : ends(p_.path(i))) {
        for (Vertex b : g_.neighbors(a)) {
          if (b < a || !p_.is_end(b) || p_.path_of(b) == i) continue;
          offer(MoveKind::MergeEnds, {i, p_.path_of(b)}, {}, {Edge(a, b)});
        }
      }
    }
  }

  // An end a of a path of order `order` attaches to an interior vertex w of
  // another path, which is cut on one side of w.
  void absorb(std::size_t order, MoveKind kind) {
    for (std::size_t i = 0; i < p_.path_count(); ++i) {
      if (p_.path(i).size() != order) continue;
      for (Vertex a : ends(p_.path(i))) {
        for (Vertex w : external_neighbors(g_, p_, a)) {
          if (!p_.is_interior(w)) continue;
          const auto loc = *p_.locate(w);
          const Path& host = p_.path(loc.path);
          for (Vertex cut : {host[loc.position - 1], host[loc.position + 1]}) {
            offer(kind, {i, loc.path}, {Edge(w, cut)}, {Edge(a, w)});
          }
        }
      }
    }
  }

  void chain_rewire() {
    for (Vertex w : l_.w_union) {
      const auto alpha = alpha_sequence(l_, p_, w);
      for (auto variant : {RewireVariant::P1, RewireVariant::P2}) {
        try {
          auto ex = rewire_exchange(g_, p_, alpha, variant);
          offer(MoveKind::ChainRewire, std::move(ex.touched), std::move(ex.removed),
                std::move(ex.added));
        } catch (const StaleLayering&) {
          // P1/P2 undefined for this w (shared paths or a missing neighbor).
        }
      }
    }
  }

  // w ∈ W_b next to u ∈ W on the same path; both hang off ends in X.
  void triple_merge() {
    for (Vertex w : l_.bad) {
      const auto loc = *p_.locate(w);
      const Path& host = p_.path(loc.path);
      std::vector<Vertex> beside;
      if (loc.position > 0) beside.push_back(host[loc.position - 1]);
      if (loc.position + 1 < host.size()) beside.push_back(host[loc.position + 1]);
      for (Vertex u : beside) {
        if (!l_.in_w(u)) continue;
        for (Vertex x : x_neighbors(w)) {
          for (Vertex x2 : x_neighbors(u)) {
            if (x == x2) continue;
            offer(MoveKind::TripleMerge, {loc.path, p_.path_of(x), p_.path_of(x2)},
                  {Edge(w, u)}, {Edge(x, w), Edge(x2, u)});
          }
        }
      }
    }
  }

  // 4-path [a, w1, w2, b] with w1, w2 ∈ W hanging off distinct ends x1, x2.
  void quad_detach() {
    for (std::size_t i = 0; i < p_.path_count(); ++i) {
      const Path& path = p_.path(i);
      if (path.size() != 4 || !l_.in_w(path[1]) || !l_.in_w(path[2])) continue;
      for (Vertex x1 : x_neighbors(path[1])) {
        for (Vertex x2 : x_neighbors(path[2])) {
          if (x1 == x2) continue;
          offer(MoveKind::QuadDetach, {i, p_.path_of(x1), p_.path_of(x2)},
                {Edge(path[1], path[2])}, {Edge(x1, path[1]), Edge(x2, path[2])});
        }
      }
    }
  }

  // Same-path variant: a short path R whose vertex set has a Hamiltonian path
  // starting at a W vertex v adjacent to an end x ∈ X is re-threaded and
  // appended to x's path.
  void rotate_into_end() {
    for (std::size_t i = 0; i < p_.path_count(); ++i) {
      const Path& path = p_.path(i);
      if (path.size() < 3 || path.size() > 5) continue;
      for (std::size_t pos = 1; pos + 1 < path.size(); ++pos) {
        const Vertex v = path[pos];
        if (!l_.in_w(v)) continue;
        const auto xs = x_neighbors(v);
        if (xs.empty()) continue;
        const auto threads = hamiltonian_paths_from(path, v);
        for (const auto& thread : threads) {
          std::vector<Edge> old_edges, new_edges;
          for (std::size_t k = 1; k < path.size(); ++k) old_edges.emplace_back(path[k - 1], path[k]);
          for (std::size_t k = 1; k < thread.size(); ++k) new_edges.emplace_back(thread[k - 1], thread[k]);
          std::sort(old_edges.begin(), old_edges.end());
          std::sort(new_edges.begin(), new_edges.end());
          std::vector<Edge> removed, added;
          std::set_difference(old_edges.begin(), old_edges.end(), new_edges.begin(),
                              new_edges.end(), std::back_inserter(removed));
          std::set_difference(new_edges.begin(), new_edges.end(), old_edges.begin(),
                              old_edges.end(), std::back_inserter(added));
          for (Vertex x : xs) {
            auto with_link = added;
            with_link.emplace_back(x, v);
            offer(MoveKind::QuadDetach, {i, p_.path_of(x)}, removed, std::move(with_link));
          }
        }
      }
    }
  }

  std::vector<Path> hamiltonian_paths_from(const Path& vertices, Vertex start) const {
    std::vector<Path> found;
    Path current{start};
    std::vector<char> used(vertices.size(), 0);
    auto index_of = [&](Vertex v) {
      return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), v) -
                                      vertices.begin());
    };
    used[index_of(start)] = 1;
    std::function<void()> extend = [&]() {
      if (current.size() == vertices.size()) {
        found.push_back(current);
        return;
      }
      for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (used[k] || !g_.has_edge(current.back(), vertices[k])) continue;
        used[k] = 1;
        current.push_back(vertices[k]);
        extend();
        current.pop_back();
        used[k] = 0;
      }
    };
    extend();
    return found;
  }

  const Graph& g_;
  const PathPartition& p_;
  const Layering& l_;
  Potential base_;
  std::vector<Rewrite> out_;
};

}  // namespace

std::vector<Rewrite> enumerate_moves(const Graph& g, const PathPartition& p, const Layering& l) {
  Scanner scanner(g, p, l);
  std::vector<Rewrite> all;
  for (MoveKind kind : kKinds) {
    auto batch = scanner.scan(kind);
    all.insert(all.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return all;
}

std::optional<Rewrite> first_move(const Graph& g, const PathPartition& p, const Layering& l) {
  Scanner scanner(g, p, l);
  for (MoveKind kind : kKinds) {
    auto batch = scanner.scan(kind);
    if (!batch.empty()) return std::move(batch.front());
  }
  return std::nullopt;
}

PathPartition apply(const Graph& g, const PathPartition& p, const Rewrite& m) {
  auto result = exchange_edges(g, p, m.paths_touched, m.edges_removed, m.edges_added);
  if (!result) throw MoveNotApplicable("rewrite no longer matches the partition");
  if (!(potential(*result) < potential(p))) {
    throw MoveNotApplicable("rewrite does not lower the potential");
  }
  return std::move(*result);
}

std::size_t default_max_steps(const Graph& g) { return 10 * g.order(); }

SearchResult local_search(const Graph& g, const PathPartition& start, std::size_t max_steps) {
  if (auto report = validate_partition(g, start); !report.ok()) {
    throw std::invalid_argument("invalid start partition: " + report.message);
  }
  SearchResult result{start, {}};
  while (true) {
    const Layering l = build_layering(g, result.partition);
    auto move = first_move(g, result.partition, l);
    ++result.trace.iterations;
    if (!move) {
      result.trace.fixpoint_reached = true;
      break;
    }
    if (result.trace.steps.size() >= max_steps) break;
    const Potential before = potential(result.partition);
    result.partition = apply(g, result.partition, *move);
    result.trace.steps.push_back({std::move(*move), before, potential(result.partition)});
  }
  return result;
}

SearchResult local_search(const Graph& g, const PathPartition& start) {
  return local_search(g, start, default_max_steps(g));
}

namespace {

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : ",") + std::to_string(v);
  return "{" + out + "}";
}

}  // namespace

ClaimReport assert_fixpoint_claims(const Graph& g, const PathPartition& p, const Layering& l) {
  if (l.fingerprint != partition_fingerprint(p)) {
    throw StaleLayering("layering was built for a different partition");
  }
  ClaimReport report;
  report.fixpoint = !first_move(g, p, l).has_value();
  report.min_degree_ok = g.order() > 0 && degree_profile(g).min_degree >= 2;
  const auto s = stats(g, p);
  report.short_paths_absent = s.count(1) + s.count(2) == 0;

  std::vector<Vertex> mid;  // C3 ∪ Int(R4) ∪ C5
  mid.insert(mid.end(), s.centers3.begin(), s.centers3.end());
  mid.insert(mid.end(), s.interior4.begin(), s.interior4.end());
  mid.insert(mid.end(), s.centers5.begin(), s.centers5.end());
  std::sort(mid.begin(), mid.end());

  for (Vertex w : l.w_union) {
    if (l.in_x(w)) report.x_w_disjoint = false;
  }

  ClaimCheck c1a{"C1a", true, ""};
  for (Vertex v : s.singletons) {
    for (Vertex w : g.neighbors(v)) {
      if (c1a.passed && !contains(s.centers3, w)) {
        c1a.passed = false;
        c1a.detail = "singleton " + std::to_string(v) + " has neighbor " + std::to_string(w) +
                     " outside C3";
      }
    }
  }

  ClaimCheck c1b{"C1b", true, ""};
  for (Vertex a : s.pair_ends) {
    for (Vertex w : external_neighbors(g, p, a)) {
      if (c1b.passed && !contains(mid, w)) {
        c1b.passed = false;
        c1b.detail = "pair end " + std::to_string(a) + " has neighbor " + std::to_string(w) +
                     " outside C3 ∪ Int(R4) ∪ C5";
      }
    }
  }

  ClaimCheck c2a{"C2a", true, ""};
  for (Vertex w : l.w_union) {
    if (c2a.passed && !contains(mid, w)) {
      c2a.passed = false;
      c2a.detail = "W vertex " + std::to_string(w) + " outside C3 ∪ Int(R4) ∪ C5";
    }
  }

  ClaimCheck c2b{"C2b", l.bad.empty(), l.bad.empty() ? "" : "W_b = " + vertex_list(l.bad)};

  ClaimCheck c3{"C3", true, ""};
  for (std::size_t i = 0; i < p.path_count() && c3.passed; ++i) {
    const Path& path = p.path(i);
    if (path.size() != 4) continue;
    std::size_t hits = 0;
    for (Vertex v : path) hits += l.in_w(v) ? 1 : 0;
    if (hits > 2) {
      c3.passed = false;
      c3.detail = "4-path " + std::to_string(i) + " carries " + std::to_string(hits) + " W vertices";
    } else if (hits == 2) {
      const auto eps = external_edge_count(g, l.x_union, path);
      if (eps != 4) {
        c3.passed = false;
        c3.detail = "4-path " + std::to_string(i) + " has eps(X, R) = " + std::to_string(eps);
      }
    }
  }

  report.checks = {c1a, c1b, c2a, c2b, c3};
  return report;
}

}  // namespace pathpart
