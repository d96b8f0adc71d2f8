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

#ifndef PATHPART_TESTS_ORACLES_HPP
#define PATHPART_TESTS_ORACLES_HPP

#include <cstddef>
#include <vector>

#include "pathpart/graph.hpp"

namespace pathpart::testing {

/// μ by trying every vertex order and cutting at non-edges. n <= 9.
std::size_t brute_force_mu(const Graph& g);

/// Plain backtracking search for a Hamiltonian path.
bool has_hamiltonian_path(const Graph& g);

/// Path graph 0-1-...-(n-1).
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph petersen();
Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

}  // namespace pathpart::testing

#endif  // PATHPART_TESTS_ORACLES_HPP
