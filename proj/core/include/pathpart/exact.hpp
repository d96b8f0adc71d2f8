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

#ifndef PATHPART_EXACT_HPP
#define PATHPART_EXACT_HPP

#include <cstddef>
#include <stdexcept>

#include "pathpart/graph.hpp"
#include "pathpart/partition.hpp"

namespace pathpart {

inline constexpr std::size_t kDefaultExactLimit = 20;
/// Ceiling for any requested limit: two bytes per (subset, vertex) state.
inline constexpr std::size_t kMaxExactLimit = 24;

class ExactLimitExceeded : public std::runtime_error {
 public:
  ExactLimitExceeded(std::size_t n, std::size_t limit)
      : std::runtime_error("exact solver refuses n = " + std::to_string(n) +
                           " (limit " + std::to_string(limit) + ")"),
        n_(n), limit_(limit) {}
  std::size_t order() const noexcept { return n_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

struct ExactResult {
  std::size_t mu = 0;
  PathPartition witness;
  std::size_t explored_states = 0;  // reachable (subset, endpoint) states
};

/// Minimum path partition by dynamic programming over (covered subset, endpoint).
///
/// dp[S][v] is the fewest paths covering S whose last path ends at v; a state
/// either extends its last path to an uncovered neighbor of v or opens a new
/// path anywhere outside S. O(2^n n) states.
ExactResult exact_mu(const Graph& g, std::size_t limit = kDefaultExactLimit);

}  // namespace pathpart

#endif  // PATHPART_EXACT_HPP
