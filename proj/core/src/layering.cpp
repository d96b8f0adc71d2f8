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

#include "pathpart/layering.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace pathpart {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

void fnv_mix(std::uint64_t& h, std::uint64_t value) {
  for (int byte = 0; byte < 8; ++byte) {
    h ^= (value >> (8 * byte)) & 0xFFu;
    h *= kFnvPrime;
  }
}

// Neighbor of path[pos] in the direction of `terminal`, which must be an end of the path.
Vertex step_towards(const Path& path, std::size_t pos, Vertex terminal) {
  return terminal == path.back() ? path[pos + 1] : path[pos - 1];
}

Vertex step_away(const Path& path, std::size_t pos, Vertex terminal) {
  return terminal == path.back() ? path[pos - 1] : path[pos + 1];
}

bool is_end_of(const Path& path, Vertex v) { return path.front() == v || path.back() == v; }

}  // namespace

std::uint64_t partition_fingerprint(const PathPartition& p) {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, p.path_count());
  for (const auto& path : p.paths()) {
    fnv_mix(h, path.size());
    for (Vertex v : path) fnv_mix(h, v);
  }
  return h;
}

std::vector<Vertex> external_neighbors(const Graph& g, const PathPartition& p, Vertex v) {
  const std::size_t own = p.path_of(v);
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (p.path_of(w) != own) out.push_back(w);
  }
  return out;
}

Layering build_layering(const Graph& g, const PathPartition& p) {
  if (auto report = validate_partition(g, p); !report.ok()) {
    throw std::invalid_argument("invalid partition: " + report.message);
  }
  const std::size_t n = g.order();
  Layering l;
  l.fingerprint = partition_fingerprint(p);
  l.x_layer_of.assign(n, 0);
  l.w_layer_of.assign(n, 0);
  l.path_layer.assign(p.path_count(), 0);
  l.path_parent.assign(p.path_count(), std::numeric_limits<Vertex>::max());

  std::vector<Vertex> fresh_x;  // X_t \ X_{t-1}
  for (std::size_t i = 0; i < p.path_count(); ++i) {
    const Path& path = p.path(i);
    if (path.size() > 2) continue;
    l.path_layer[i] = 1;
    for (Vertex v : path) fresh_x.push_back(v);
  }
  if (fresh_x.empty()) return l;

  std::vector<Vertex> x_all;
  for (std::size_t t = 1;; ++t) {
    std::sort(fresh_x.begin(), fresh_x.end());
    for (Vertex x : fresh_x) l.x_layer_of[x] = t;
    x_all.insert(x_all.end(), fresh_x.begin(), fresh_x.end());
    std::sort(x_all.begin(), x_all.end());
    l.x_layers.push_back(x_all);

    // fresh_x is ascending, so the first discoverer is the smallest witness.
    std::vector<Vertex> w_new;
    for (Vertex x : fresh_x) {
      for (Vertex w : external_neighbors(g, p, x)) {
        if (l.w_layer_of[w] != 0) continue;
        l.w_layer_of[w] = t;
        l.back_edge[w] = x;
        w_new.push_back(w);
      }
    }
    std::sort(w_new.begin(), w_new.end());
    l.w_layers.push_back(w_new);

    fresh_x.clear();
    for (Vertex w : w_new) {
      if (!p.is_interior(w)) continue;
      const std::size_t host = p.path_of(w);
      if (l.path_layer[host] == 0) {
        l.path_layer[host] = t + 1;
        l.path_parent[host] = w;
        fresh_x.push_back(p.path(host).front());
        fresh_x.push_back(p.path(host).back());
      }
    }
    if (fresh_x.empty()) break;
  }

  l.x_union = x_all;
  for (const auto& layer : l.w_layers) l.w_union.insert(l.w_union.end(), layer.begin(), layer.end());
  std::sort(l.w_union.begin(), l.w_union.end());
  for (std::size_t i = 0; i < p.path_count(); ++i) {
    if (l.path_layer[i] != 0) l.prime_paths.push_back(i);
  }
  auto split = classify_good_order(g, p, l);
  l.good_order = std::move(split.good);
  l.bad = std::move(split.bad);
  return l;
}

GoodOrderSplit classify_good_order(const Graph&, const PathPartition& p, const Layering& l) {
  GoodOrderSplit out;
  for (Vertex w : l.w_union) {
    const std::size_t host = p.path_of(w);
    const bool good = p.is_interior(w) && l.path_layer[host] == l.w_layer_of[w] + 1;
    (good ? out.good : out.bad).push_back(w);
  }
  return out;
}

AlphaSequence alpha_sequence(const Layering& l, const PathPartition& p, Vertex w) {
  if (l.fingerprint != partition_fingerprint(p)) {
    throw StaleLayering("layering was built for a different partition");
  }
  if (!l.in_w(w)) throw std::invalid_argument("vertex " + std::to_string(w) + " is not in W");
  AlphaSequence a;
  Vertex cur = w;
  while (true) {
    const Vertex x = l.back_edge.at(cur);
    a.steps.emplace_back(x, cur);
    if (l.w_layer_of[cur] == 1) break;
    cur = l.path_parent[p.path_of(x)];
  }
  std::reverse(a.steps.begin(), a.steps.end());
  a.host_terminal = p.path(p.path_of(w)).back();
  return a;
}

EdgeExchange rewire_exchange(const Graph& g, const PathPartition& p, const AlphaSequence& a,
                             RewireVariant variant) {
  if (a.steps.empty()) throw StaleLayering("empty alpha-sequence");
  const std::size_t r = a.steps.size();
  EdgeExchange ex;

  const auto [x1, w1] = a.steps.front();
  const auto start = p.locate(x1);
  if (!start || !p.is_end(x1)) throw StaleLayering("x_1 is not a path end");
  ex.touched.push_back(start->path);

  for (std::size_t t = 0; t < r; ++t) {
    const auto [x, w] = a.steps[t];
    if (!g.has_edge(x, w)) throw StaleLayering("x_t w_t is not an edge");
    const auto loc = p.locate(w);
    if (!loc) throw StaleLayering("w_t is not covered");
    const Path& host = p.path(loc->path);
    if (t + 1 < r && p.locate(a.steps[t + 1].first)->path != loc->path) {
      throw StaleLayering("w_t and x_{t+1} lie on different paths");
    }
    const Vertex terminal = t + 1 < r ? a.steps[t + 1].first : a.host_terminal;
    if (!is_end_of(host, terminal)) throw StaleLayering("terminal vertex is not a path end");
    if (w == terminal) throw StaleLayering("w_t has no successor");
    ex.touched.push_back(loc->path);
    ex.added.emplace_back(x, w);
    if (t + 1 == r && variant == RewireVariant::P2) {
      const Vertex initial = terminal == host.back() ? host.front() : host.back();
      if (w == initial) throw StaleLayering("w_r has no predecessor");
      ex.removed.emplace_back(w, step_away(host, loc->position, terminal));
    } else {
      ex.removed.emplace_back(w, step_towards(host, loc->position, terminal));
    }
  }

  std::vector<std::size_t> distinct = ex.touched;
  std::sort(distinct.begin(), distinct.end());
  if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) {
    throw StaleLayering("alpha-sequence revisits a path");
  }
  ex.touched = std::move(distinct);
  return ex;
}

PathPartition derive_rewired(const Graph& g, const PathPartition& p, const AlphaSequence& a,
                             RewireVariant variant) {
  const auto ex = rewire_exchange(g, p, a, variant);
  auto out = exchange_edges(g, p, ex.touched, ex.removed, ex.added);
  if (!out) throw StaleLayering("rewired edge set is not a path partition");
  return std::move(*out);
}

std::pair<std::size_t, std::size_t> split_orders(const AlphaSequence& a, const PathPartition& p) {
  const Vertex w = a.last();
  const auto loc = p.locate(w).value();
  const Path& host = p.path(loc.path);
  const std::size_t before = loc.position;
  const std::size_t after = host.size() - 1 - loc.position;
  return a.host_terminal == host.back() ? std::pair{after, before} : std::pair{before, after};
}

}  // namespace pathpart
