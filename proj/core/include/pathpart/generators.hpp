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

#ifndef PATHPART_GENERATORS_HPP
#define PATHPART_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pathpart/graph.hpp"
#include "pathpart/partition.hpp"

namespace pathpart {

/// SplitMix64. Fixed so that seeded corpora agree across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Parameters no generator attempt could satisfy.
class InfeasibleParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// m disjoint copies of K_{δ,Δ}. Copy i uses vertices i(δ+Δ) .. (i+1)(δ+Δ)−1,
/// the δ-side first.
Graph bipartite_copies(std::size_t delta, std::size_t Delta, std::size_t m);

/// m disjoint copies of K_{δ+1}.
Graph clique_copies(std::size_t delta, std::size_t m);

/// Seeded random graph with δ <= d(v) <= Δ. Not necessarily connected.
/// Requires 2 <= delta <= Delta <= n-1; throws InfeasibleParameters when the
/// retry budget runs out.
Graph random_bounded(std::size_t n, std::size_t delta, std::size_t Delta, std::uint64_t seed);

/// Seeded connected cubic graph from the pairing model. n even, n >= 4.
Graph random_cubic(std::size_t n, std::uint64_t seed);

struct Fixture {
  Graph graph;
  PathPartition partition;
  std::vector<std::string> labels;  // vertex id -> label (x1.., w1.., u1..)

  Vertex id(std::string_view label) const;
};

/// The 38-vertex, 11-path example drawing. x_i -> i-1, w_i -> 20+i, and the
/// nine unlabeled vertices u1..u9 -> 29..37.
const Fixture& figure1_fixture();

/// Data file text for the fixture: labels as comments, then the edge list,
/// then the partition behind "# paths".
std::string fixture_text(const Fixture& f);

/// 64-bit FNV-1a of the given text, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view text);

enum class Family { BipartiteCopies, CliqueCopies, RandomBounded, RandomCubic, Fixture };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);  // throws std::invalid_argument

/// One corpus instance: a family, its integer parameters and a seed.
struct CorpusSpec {
  Family family = Family::RandomBounded;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::size_t Delta = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;

  friend auto operator<=>(const CorpusSpec&, const CorpusSpec&) = default;
};

/// Stable key such as "random_bounded n=10 delta=2 Delta=5 seed=3".
std::string instance_key(const CorpusSpec& s);

Graph generate(const CorpusSpec& s);

/// Parses "family:key=value,..." (e.g. "random_bounded:n=10,delta=2,Delta=5,seed=1").
CorpusSpec parse_generator_spec(std::string_view text);

}  // namespace pathpart

#endif  // PATHPART_GENERATORS_HPP
