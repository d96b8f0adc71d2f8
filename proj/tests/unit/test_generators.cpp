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

#include "oracles.hpp"
#include "pathpart/corpus.hpp"
#include "pathpart/exact.hpp"
#include "pathpart/generators.hpp"
#include "pathpart/io.hpp"

using namespace pathpart;
namespace t = pathpart::testing;

TEST_CASE("splitmix64 reference values") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
  SplitMix64 bounded(5);
  for (int i = 0; i < 1000; ++i) CHECK(bounded.below(7) < 7);
}

TEST_CASE("bipartite copies") {
  const Graph k24 = bipartite_copies(2, 4, 1);
  CHECK(k24.order() == 6);
  CHECK(k24.size() == 8);
  const Graph three = bipartite_copies(2, 4, 3);
  CHECK(three.order() == 18);
  CHECK(connected_components(three).size() == 3);
  CHECK(degree_profile(three) == DegreeProfile{2, 4});
  const Graph k33 = bipartite_copies(3, 3, 1);
  CHECK(k33.size() == 9);
  CHECK(degree_profile(k33) == DegreeProfile{3, 3});
}

TEST_CASE("clique copies") {
  const Graph tri = clique_copies(2, 3);
  CHECK(tri.order() == 9);
  CHECK(tri.size() == 9);
  CHECK(clique_copies(3, 1) == t::complete_graph(4));
  const Graph edges = clique_copies(1, 2);
  CHECK(edges.order() == 4);
  CHECK(edges.size() == 2);
}

TEST_CASE("random bounded respects the degree window") {
  for (std::size_t n = 6; n <= 16; ++n) {
    for (std::size_t d = 2; d <= 3; ++d) {
      for (std::size_t D = d; D <= std::min<std::size_t>(n - 1, 2 * d + 2); ++D) {
        if (d == D && (n * d) % 2 == 1) continue;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          const Graph g = random_bounded(n, d, D, seed);
          const DegreeProfile prof = degree_profile(g);
          CHECK(prof.min_degree >= d);
          CHECK(prof.max_degree <= D);
        }
      }
    }
  }
}

TEST_CASE("random bounded is reproducible") {
  CHECK(random_bounded(10, 2, 5, 1) == random_bounded(10, 2, 5, 1));
  CHECK_FALSE(random_bounded(14, 2, 5, 1) == random_bounded(14, 2, 5, 2));
  CHECK(random_bounded(5, 4, 4, 123) == t::complete_graph(5));
}

TEST_CASE("random bounded errors") {
  CHECK_THROWS_AS(random_bounded(4, 3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_bounded(4, 1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_bounded(4, 2, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_bounded(5, 3, 3, 0), InfeasibleParameters);
}

TEST_CASE("random cubic") {
  CHECK(random_cubic(4, 99) == t::complete_graph(4));
  for (std::size_t n = 4; n <= 20; n += 2) {
    const Graph g = random_cubic(n, n);
    CHECK(degree_profile(g) == DegreeProfile{3, 3});
    CHECK(is_connected(g));
  }
  CHECK(random_cubic(10, 7) == random_cubic(10, 7));
  CHECK_THROWS_AS(random_cubic(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_cubic(2, 0), std::invalid_argument);
}

TEST_CASE("fixture shape") {
  const Fixture& f = figure1_fixture();
  CHECK(f.graph.order() == 38);
  CHECK(f.partition.path_count() == 11);
  CHECK(validate_partition(f.graph, f.partition).ok());
  CHECK(f.id("x1") == 0);
  CHECK(f.id("x21") == 20);
  CHECK(f.id("w1") == 21);
  CHECK(f.id("w8") == 28);
  CHECK(f.id("u9") == 37);
  CHECK_THROWS_AS(f.id("z"), std::out_of_range);
  const auto s = stats(f.graph, f.partition);
  CHECK(s.count(1) == 1);
  CHECK(s.count(2) == 3);
  CHECK(s.count(3) == 1);
  CHECK(s.count(4) == 2);
  CHECK(s.count(5) == 4);
  CHECK(potential(f.partition) == Potential{11, 1, 3});
}

TEST_CASE("fixture data file matches the embedded transcription") {
  const Fixture& f = figure1_fixture();
  const std::string text = fixture_text(f);
  CHECK(read_text(PATHPART_DATA_DIR "/figure1.txt") == text);
  std::string pinned = read_text(PATHPART_DATA_DIR "/figure1.fnv1a");
  while (!pinned.empty() && (pinned.back() == '\n' || pinned.back() == ' ')) pinned.pop_back();
  CHECK(fnv1a_hex(text) == pinned);
  CHECK(parse_edge_list(text) == f.graph);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
}

TEST_CASE("generator specs") {
  const CorpusSpec s = parse_generator_spec("random_bounded:n=10,delta=2,Delta=5,seed=1");
  CHECK(s.family == Family::RandomBounded);
  CHECK(generate(s) == random_bounded(10, 2, 5, 1));
  CHECK(generate(parse_generator_spec("bipartite_copies:delta=2,Delta=4,m=2")) ==
        bipartite_copies(2, 4, 2));
  CHECK(generate(parse_generator_spec("fixture")) == figure1_fixture().graph);
  CHECK_THROWS_AS(parse_generator_spec("nope:n=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("random_cubic:n=x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("random_cubic:q=1"), std::invalid_argument);
  CHECK(instance_key(s) == "random_bounded n=10 delta=2 Delta=5 seed=1");
}

TEST_CASE("generated tight families") {
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t D = d + 2; D <= 2 * d + 2; ++D) {
      if (2 * (d + D) > 18) continue;
      CHECK(exact_mu(bipartite_copies(d, D, 2)).mu == 2 * (D - d));
    }
  }
  for (std::size_t m = 1; m <= 3; ++m) CHECK(exact_mu(clique_copies(3, m)).mu == m);
}
