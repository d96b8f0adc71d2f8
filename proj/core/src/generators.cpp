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

#include "pathpart/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "pathpart/io.hpp"

namespace pathpart {
namespace {

std::size_t index(std::uint64_t v) { return static_cast<std::size_t>(v); }

// Mutable simple graph used while sampling.
class Builder {
 public:
  explicit Builder(std::size_t n) : adj_(n) {}

  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has(Vertex a, Vertex b) const { return adj_[a].count(b) != 0; }
  void add(Vertex a, Vertex b) {
    adj_[a].insert(b);
    adj_[b].insert(a);
    edges_.insert(Edge(a, b));
  }
  void remove(Vertex a, Vertex b) {
    adj_[a].erase(b);
    adj_[b].erase(a);
    edges_.erase(Edge(a, b));
  }
  const std::set<Edge>& edges() const { return edges_; }
  Graph build() const {
    std::vector<Edge> list(edges_.begin(), edges_.end());
    return Graph(adj_.size(), list);
  }

 private:
  std::vector<std::set<Vertex>> adj_;
  std::set<Edge> edges_;
};

// One sampling attempt: random insertion, then repair of deficient vertices.
std::optional<Graph> bounded_attempt(std::size_t n, std::size_t delta, std::size_t Delta,
                                     SplitMix64& rng) {
  Builder b(n);
  const std::size_t target = (n * delta + 1) / 2 + index(rng.below(n / 2 + 1));
  const std::size_t max_edges = n * Delta / 2;
  const std::size_t goal = std::min(target, max_edges);
  for (std::size_t tries = 0; b.edges().size() < goal && tries < 16 * goal; ++tries) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (u == v || b.has(u, v) || b.degree(u) >= Delta || b.degree(v) >= Delta) continue;
    b.add(u, v);
  }

  const std::size_t budget = 64 * n * Delta;
  for (std::size_t step = 0; step < budget; ++step) {
    Vertex v = 0;
    while (v < n && b.degree(v) >= delta) ++v;
    if (v == n) return b.build();

    std::vector<Vertex> open;
    for (Vertex u = 0; u < n; ++u) {
      if (u != v && !b.has(u, v) && b.degree(u) < Delta) open.push_back(u);
    }
    if (!open.empty()) {
      b.add(v, open[index(rng.below(open.size()))]);
      continue;
    }
    // Every non-neighbor is saturated: split an edge ab away from v.
    std::vector<Edge> far;
    for (const Edge& e : b.edges()) {
      if (e.u != v && e.v != v && (!b.has(v, e.u) || !b.has(v, e.v))) far.push_back(e);
    }
    if (far.empty()) return std::nullopt;
    const Edge e = far[index(rng.below(far.size()))];
    b.remove(e.u, e.v);
    for (Vertex x : {e.u, e.v}) {
      if (!b.has(v, x) && b.degree(v) < Delta) b.add(v, x);
    }
  }
  return std::nullopt;
}

bool is_simple_pairing(const std::vector<Vertex>& points, std::vector<Edge>& out) {
  std::set<Edge> seen;
  for (std::size_t i = 0; i < points.size(); i += 2) {
    const Vertex a = points[i];
    const Vertex b = points[i + 1];
    if (a == b) return false;
    if (!seen.insert(Edge(a, b)).second) return false;
  }
  out.assign(seen.begin(), seen.end());
  return true;
}

std::size_t parse_size(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty()) {
    throw std::invalid_argument("bad value for " + std::string(key) + ": '" + std::string(value) + "'");
  }
  return static_cast<std::size_t>(out);
}

Fixture make_figure1() {
  Fixture f;
  for (int i = 1; i <= 21; ++i) f.labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= 8; ++i) f.labels.push_back("w" + std::to_string(i));
  for (int i = 1; i <= 9; ++i) f.labels.push_back("u" + std::to_string(i));

  // Drawing coordinates a..s, a'..s' in order, with their labels:
  // a x1  b x2  c x3  d x4  e x5  f x6  g x7  h x8  i w1  j x9  k x10 l w2
  // m u1  n x11 o x12 p w3  q w4  r x13 s x14
  // a' u2 b' w5 c' u3 d' x15 e' x16 f' u4 g' w6 h' u5 i' x17 j' x18 k' u6
  // l' w7 m' u7 n' x19 o' x20 p' u8 q' w8 r' u9 s' x21
  static constexpr std::pair<const char*, const char*> kEdges[] = {
      {"x1", "w1"},  {"w1", "x2"},  {"x2", "x3"},  {"x3", "w2"},  {"w2", "w6"},  {"w6", "x11"},
      {"x11", "u1"}, {"u1", "w2"},  {"w2", "x10"}, {"x8", "w1"},  {"w1", "x9"},  {"x16", "u4"},
      {"u4", "w6"},  {"w6", "u5"},  {"u5", "x17"}, {"w6", "x12"}, {"x12", "w3"}, {"w3", "w4"},
      {"w4", "x13"}, {"x13", "w7"}, {"w7", "x20"}, {"x20", "u8"}, {"u8", "w8"},  {"w8", "u9"},
      {"u9", "x21"}, {"x4", "x5"},  {"x5", "w3"},  {"w3", "x17"}, {"x5", "w4"},  {"x18", "u6"},
      {"u6", "w7"},  {"w7", "u7"},  {"u7", "x19"}, {"w8", "x19"}, {"x19", "w5"}, {"w7", "w5"},
      {"w5", "x7"},  {"x7", "x6"},  {"x14", "u2"}, {"u2", "w5"},  {"w5", "u3"},  {"u3", "x15"},
  };
  static const std::vector<std::vector<const char*>> kPaths = {
      {"x1"},
      {"x2", "x3"},
      {"x4", "x5"},
      {"x6", "x7"},
      {"x8", "w1", "x9"},
      {"x10", "w2", "u1", "x11"},
      {"x12", "w3", "w4", "x13"},
      {"x14", "u2", "w5", "u3", "x15"},
      {"x16", "u4", "w6", "u5", "x17"},
      {"x18", "u6", "w7", "u7", "x19"},
      {"x20", "u8", "w8", "u9", "x21"},
  };

  std::vector<Edge> edges;
  for (const auto& [a, b] : kEdges) edges.emplace_back(f.id(a), f.id(b));
  f.graph = Graph(f.labels.size(), edges);
  std::vector<Path> paths;
  for (const auto& names : kPaths) {
    Path path;
    for (const char* name : names) path.push_back(f.id(name));
    paths.push_back(std::move(path));
  }
  f.partition = PathPartition(std::move(paths));
  return f;
}

}  // namespace

Graph bipartite_copies(std::size_t delta, std::size_t Delta, std::size_t m) {
  if (delta < 1 || Delta < delta || m < 1) {
    throw std::invalid_argument("bipartite_copies needs 1 <= delta <= Delta and m >= 1");
  }
  const std::size_t block = delta + Delta;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < m; ++c) {
    const auto base = static_cast<Vertex>(c * block);
    for (std::size_t i = 0; i < delta; ++i) {
      for (std::size_t j = 0; j < Delta; ++j) {
        edges.emplace_back(base + static_cast<Vertex>(i), base + static_cast<Vertex>(delta + j));
      }
    }
  }
  return Graph(m * block, edges);
}

Graph clique_copies(std::size_t delta, std::size_t m) {
  if (delta < 1 || m < 1) throw std::invalid_argument("clique_copies needs delta >= 1 and m >= 1");
  const std::size_t block = delta + 1;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < m; ++c) {
    const auto base = static_cast<Vertex>(c * block);
    for (Vertex i = 0; i < block; ++i) {
      for (Vertex j = i + 1; j < block; ++j) edges.emplace_back(base + i, base + j);
    }
  }
  return Graph(m * block, edges);
}

Graph random_bounded(std::size_t n, std::size_t delta, std::size_t Delta, std::uint64_t seed) {
  if (delta > Delta) throw std::invalid_argument("random_bounded: delta > Delta");
  if (delta < 2) throw std::invalid_argument("random_bounded: delta must be at least 2");
  if (Delta + 1 > n) throw std::invalid_argument("random_bounded: Delta must be at most n-1");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (auto g = bounded_attempt(n, delta, Delta, rng)) return *std::move(g);
  }
  throw InfeasibleParameters("random_bounded: no graph with n=" + std::to_string(n) +
                             " delta=" + std::to_string(delta) + " Delta=" + std::to_string(Delta) +
                             " found");
}

Graph random_cubic(std::size_t n, std::uint64_t seed) {
  if (n % 2 != 0) throw std::invalid_argument("random_cubic: n must be even");
  if (n < 4) throw std::invalid_argument("random_cubic: n must be at least 4");
  SplitMix64 rng(seed);
  std::vector<Vertex> points(3 * n);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
    for (std::size_t i = points.size() - 1; i > 0; --i) {
      std::swap(points[i], points[index(rng.below(i + 1))]);
    }
    if (!is_simple_pairing(points, edges)) continue;
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw InfeasibleParameters("random_cubic: retry budget exhausted");
}

Vertex Fixture::id(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<Vertex>(i);
  }
  throw std::out_of_range("unknown fixture label '" + std::string(label) + "'");
}

const Fixture& figure1_fixture() {
  static const Fixture fixture = make_figure1();
  return fixture;
}

std::string fixture_text(const Fixture& f) {
  std::ostringstream out;
  out << "# example drawing fixture\n";
  for (std::size_t i = 0; i < f.labels.size(); ++i) out << "# label " << i << ' ' << f.labels[i] << '\n';
  out << serialize_edge_list(f.graph);
  out << "# paths\n";
  std::istringstream paths(serialize_partition(f.partition));
  for (std::string line; std::getline(paths, line);) out << "# " << line << '\n';
  return out.str();
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::BipartiteCopies: return "bipartite_copies";
    case Family::CliqueCopies: return "clique_copies";
    case Family::RandomBounded: return "random_bounded";
    case Family::RandomCubic: return "random_cubic";
    case Family::Fixture: return "fixture";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::BipartiteCopies, Family::CliqueCopies, Family::RandomBounded,
                   Family::RandomCubic, Family::Fixture}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string instance_key(const CorpusSpec& s) {
  std::string key(to_string(s.family));
  switch (s.family) {
    case Family::BipartiteCopies:
      key += " delta=" + std::to_string(s.delta) + " Delta=" + std::to_string(s.Delta) +
             " m=" + std::to_string(s.m);
      break;
    case Family::CliqueCopies:
      key += " delta=" + std::to_string(s.delta) + " m=" + std::to_string(s.m);
      break;
    case Family::RandomBounded:
      key += " n=" + std::to_string(s.n) + " delta=" + std::to_string(s.delta) +
             " Delta=" + std::to_string(s.Delta) + " seed=" + std::to_string(s.seed);
      break;
    case Family::RandomCubic:
      key += " n=" + std::to_string(s.n) + " seed=" + std::to_string(s.seed);
      break;
    case Family::Fixture:
      break;
  }
  return key;
}

Graph generate(const CorpusSpec& s) {
  switch (s.family) {
    case Family::BipartiteCopies: return bipartite_copies(s.delta, s.Delta, s.m);
    case Family::CliqueCopies: return clique_copies(s.delta, s.m);
    case Family::RandomBounded: return random_bounded(s.n, s.delta, s.Delta, s.seed);
    case Family::RandomCubic: return random_cubic(s.n, s.seed);
    case Family::Fixture: return figure1_fixture().graph;
  }
  throw std::invalid_argument("unknown family");
}

CorpusSpec parse_generator_spec(std::string_view text) {
  CorpusSpec s;
  const auto colon = text.find(':');
  s.family = parse_family(text.substr(0, colon));
  s.m = 1;
  if (colon == std::string_view::npos) return s;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::size_t value = parse_size(key, item.substr(eq + 1));
    if (key == "n") s.n = value;
    else if (key == "delta") s.delta = value;
    else if (key == "Delta") s.Delta = value;
    else if (key == "m") s.m = value;
    else if (key == "seed") s.seed = value;
    else throw std::invalid_argument("unknown generator key '" + std::string(key) + "'");
  }
  return s;
}

}  // namespace pathpart
