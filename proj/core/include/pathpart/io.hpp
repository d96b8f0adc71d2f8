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

#ifndef PATHPART_IO_HPP
#define PATHPART_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pathpart/graph.hpp"
#include "pathpart/partition.hpp"

namespace pathpart {

// Edge-list text: "#" starts a comment, an optional "n <count>" header
// declares the vertex count, every other line is "u v" (0-indexed). Without a
// header n is one more than the largest endpoint.
Graph parse_edge_list(std::string_view text);

// DIMACS: "c" comment lines, one "p edge <n> <m>" line, "e u v" lines (1-indexed).
Graph parse_dimacs(std::string_view text);

enum class GraphFormat { Auto, EdgeList, Dimacs };

/// Auto picks DIMACS when the first meaningful line starts with "p" or "c".
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

/// Reads a graph from a file, or standard input when `path` is "-".
Graph read_graph(const std::filesystem::path& path, GraphFormat format = GraphFormat::Auto);

/// "n <count>" header followed by one "u v" line per edge, u < v, sorted.
std::string serialize_edge_list(const Graph& g);

/// One path per line, vertices separated by single spaces.
std::string serialize_partition(const PathPartition& p);

/// Inverse of serialize_partition; blank lines and "#" comments are ignored.
/// Throws GraphError on malformed tokens. Does not validate against a graph.
PathPartition parse_partition(std::string_view text);

PathPartition read_partition(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);

}  // namespace pathpart

#endif  // PATHPART_IO_HPP
