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

#include "pathpart/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

namespace pathpart {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> to_uint(std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::uint64_t expect_uint(std::string_view token, std::size_t line_no) {
  auto value = to_uint(token);
  if (!value || *value > 0xFFFFFFFEull) {
    throw GraphError("expected a nonnegative integer, got '" + std::string(token) + "'", line_no);
  }
  return *value;
}

std::string_view strip_comment(std::string_view line, char marker) {
  auto pos = line.find(marker);
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

Edge checked_edge(std::uint64_t u, std::uint64_t v, std::optional<std::uint64_t> declared,
                  std::size_t line_no) {
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u), line_no);
  if (declared && (u >= *declared || v >= *declared)) {
    throw GraphError("edge endpoint " + std::to_string(std::max(u, v)) +
                         " out of range for n = " + std::to_string(*declared),
                     line_no);
  }
  return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> declared;
  std::vector<Edge> edges;
  std::uint64_t max_id = 0;
  bool any_edge = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tok = tokens(strip_comment(lines[i], '#'));
    if (tok.empty()) continue;
    if (tok[0] == "n") {
      if (tok.size() != 2) throw GraphError("header must be 'n <count>'", line_no);
      if (declared) throw GraphError("duplicate 'n' header", line_no);
      if (any_edge) throw GraphError("'n' header must precede edges", line_no);
      declared = expect_uint(tok[1], line_no);
      continue;
    }
    if (tok.size() != 2) throw GraphError("expected 'u v'", line_no);
    const auto u = expect_uint(tok[0], line_no);
    const auto v = expect_uint(tok[1], line_no);
    edges.push_back(checked_edge(u, v, declared, line_no));
    max_id = std::max({max_id, u, v});
    any_edge = true;
  }
  const std::size_t n = declared ? *declared : (any_edge ? max_id + 1 : 0);
  return Graph(n, edges);
}

Graph parse_dimacs(std::string_view text) {
  std::optional<std::uint64_t> declared;
  std::vector<Edge> edges;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tok = tokens(lines[i]);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw GraphError("expected 'p edge <n> <m>'", line_no);
      }
      if (declared) throw GraphError("duplicate problem line", line_no);
      declared = expect_uint(tok[2], line_no);
      expect_uint(tok[3], line_no);
      continue;
    }
    if (tok[0] == "e") {
      if (!declared) throw GraphError("edge line before problem line", line_no);
      if (tok.size() != 3) throw GraphError("expected 'e u v'", line_no);
      const auto u = expect_uint(tok[1], line_no);
      const auto v = expect_uint(tok[2], line_no);
      if (u == 0 || v == 0) throw GraphError("DIMACS vertices are 1-indexed", line_no);
      edges.push_back(checked_edge(u - 1, v - 1, declared, line_no));
      continue;
    }
    throw GraphError("unknown line type '" + std::string(tok[0]) + "'", line_no);
  }
  if (!declared) throw GraphError("missing 'p edge' line");
  return Graph(*declared, edges);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    format = GraphFormat::EdgeList;
    for (auto line : split_lines(text)) {
      const auto tok = tokens(line);
      if (tok.empty() || tok[0].starts_with('#')) continue;
      if (tok[0] == "p" || tok[0] == "c") format = GraphFormat::Dimacs;
      break;
    }
  }
  return format == GraphFormat::Dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string read_text(const std::filesystem::path& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph read_graph(const std::filesystem::path& path, GraphFormat format) {
  return parse_graph(read_text(path), format);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string serialize_partition(const PathPartition& p) {
  std::ostringstream out;
  for (const auto& path : p.paths()) {
    for (std::size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << path[i];
    out << '\n';
  }
  return out.str();
}

PathPartition parse_partition(std::string_view text) {
  std::vector<Path> paths;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto tok = tokens(strip_comment(lines[i], '#'));
    if (tok.empty()) continue;
    Path path;
    for (auto t : tok) path.push_back(static_cast<Vertex>(expect_uint(t, i + 1)));
    paths.push_back(std::move(path));
  }
  return PathPartition(std::move(paths));
}

PathPartition read_partition(const std::filesystem::path& path) {
  return parse_partition(read_text(path));
}

}  // namespace pathpart
