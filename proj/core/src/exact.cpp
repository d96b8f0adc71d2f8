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

#include "pathpart/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace pathpart {
namespace {

constexpr std::uint8_t kUnreached = 0xFF;
constexpr std::int8_t kNewPath = -1;

}  // namespace

ExactResult exact_mu(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("exact solver needs at least one vertex");
  const std::size_t effective = std::min(limit, kMaxExactLimit);
  if (n > effective) throw ExactLimitExceeded(n, effective);

  std::vector<std::uint32_t> nbr_mask(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) nbr_mask[v] |= 1u << w;
  }

  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::uint8_t> dp(subsets * n, kUnreached);
  std::vector<std::int8_t> parent(subsets * n, kNewPath);
  auto at = [n](std::uint32_t s, std::size_t v) { return static_cast<std::size_t>(s) * n + v; };

  for (std::size_t v = 0; v < n; ++v) dp[at(1u << v, v)] = 1;

  ExactResult result;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    std::uint8_t best = kUnreached;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      const std::uint8_t cost = dp[at(s, v)];
      if (cost == kUnreached) continue;
      ++result.explored_states;
      best = std::min(best, cost);
      // Extend the current path from v.
      for (std::uint32_t out = nbr_mask[v] & ~s; out; out &= out - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(out));
        const std::size_t idx = at(s | (1u << u), u);
        if (cost < dp[idx]) {
          dp[idx] = cost;
          parent[idx] = static_cast<std::int8_t>(v);
        }
      }
    }
    if (best == kUnreached || s == full) continue;
    // Open a new path at any uncovered vertex.
    const auto opened = static_cast<std::uint8_t>(best + 1);
    for (std::uint32_t out = full & ~s; out; out &= out - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(out));
      const std::size_t idx = at(s | (1u << u), u);
      if (opened < dp[idx]) {
        dp[idx] = opened;
        parent[idx] = kNewPath;
      }
    }
  }

  std::size_t end = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (dp[at(full, v)] < dp[at(full, end)]) end = v;
  }
  result.mu = dp[at(full, end)];

  // Walk parent pointers back; a kNewPath parent closes the current path and
  // continues from the cheapest endpoint of the remaining subset.
  std::vector<Path> paths;
  Path current;
  std::uint32_t s = full;
  std::size_t v = end;
  while (true) {
    current.push_back(static_cast<Vertex>(v));
    const std::int8_t prev = parent[at(s, v)];
    const std::uint8_t cost = dp[at(s, v)];
    s &= ~(1u << v);
    if (prev != kNewPath) {
      v = static_cast<std::size_t>(prev);
      continue;
    }
    std::reverse(current.begin(), current.end());
    paths.push_back(std::move(current));
    current.clear();
    if (s == 0) break;
    std::size_t next = n;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(rest));
      if (dp[at(s, u)] + 1 == cost) {
        next = u;
        break;
      }
    }
    v = next;
  }
  std::reverse(paths.begin(), paths.end());
  result.witness = PathPartition(std::move(paths));
  return result;
}

}  // namespace pathpart
