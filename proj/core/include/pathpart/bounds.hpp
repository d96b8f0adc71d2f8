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

#ifndef PATHPART_BOUNDS_HPP
#define PATHPART_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "pathpart/graph.hpp"
#include "pathpart/layering.hpp"
#include "pathpart/partition.hpp"

namespace pathpart {

using Rational = boost::rational<std::int64_t>;

/// "p/q" with q > 0, also for integers ("2/1").
std::string to_string(const Rational& r);

/// (Δ−δ)n/(Δ+δ); nullopt unless δ >= 2 and Δ >= 2δ.
std::optional<Rational> theorem_bound(std::size_t n, std::size_t delta, std::size_t Delta);

struct ConjectureBound {
  Rational value;
  bool isolated_vertices = false;  // δ = 0: every isolated vertex is its own path, value = n
};

/// max{n/(δ+1), (Δ−δ)n/(Δ+δ)}.
ConjectureBound conjecture_bound(std::size_t n, std::size_t delta, std::size_t Delta);

/// ⌈n/9⌉ for connected cubic graphs, ⌈n/10⌉ when 2-connected. Requires n >= 4.
std::size_t cubic_bound(std::size_t n, bool two_connected);

enum class Verdict { Pass, Fail, NotApplicable };
std::string_view to_string(Verdict v);

struct BoundReport {
  std::size_t n = 0;
  std::size_t delta = 0;
  std::size_t Delta = 0;
  std::optional<Rational> k;                // Δ/δ, undefined for δ = 0
  std::optional<Rational> theorem_value;    // set when preconditions hold
  Rational conjecture_value;
  bool preconditions_met = false;           // δ >= 2 and Δ >= 2δ
  std::size_t partition_size = 0;
  Verdict verdict = Verdict::NotApplicable;  // theorem check
  bool tight = false;                        // partition_size equals the theorem value
  Verdict conjecture_verdict = Verdict::Fail;
  bool conjecture_empirical = true;          // outside the proven Δ >= 2δ, δ >= 2 regime
};

BoundReport check_bound(const Graph& g, std::size_t partition_size);
BoundReport check_bound(const Graph& g, const PathPartition& p);

struct EpsilonSandwich {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t actual = 0;
  bool fixpoint = false;
  bool x_w_disjoint = true;

  bool holds() const noexcept { return lower <= actual && actual <= upper; }
};

/// Both closed forms for the X–W edge count, next to the count itself.
EpsilonSandwich epsilon_sandwich(const Graph& g, const PathPartition& p, const Layering& l);

struct CountingReport {
  bool fixpoint = false;
  bool preconditions_met = false;
  bool short_paths_absent = false;   // p1 + p2 = 0: the n/3 branch
  bool degenerate = false;           // p3+p4+p5 = 0 while p1+2p2 > 0 over P'
  std::optional<Rational> r;         // solves p1 + 2p2 = r(p3+p4+p5) + (2/δ)p2
  std::optional<Rational> k;
  std::size_t n1 = 0;                // |V(P')|
  std::size_t n2 = 0;
  std::size_t p = 0;                 // |P'|
  std::size_t partition_size = 0;
  std::size_t epsilon_upper = 0;
  std::size_t epsilon_lower = 0;
  std::size_t epsilon_actual = 0;
  bool claim4_ok = false;
  bool claim5_ok = false;
  bool p_bound_ok = false;
  bool final_ok = false;

  bool all_ok() const noexcept { return claim4_ok && claim5_ok && p_bound_ok && final_ok; }
};

/// Replays the counting argument on a fixpoint partition with exact rationals.
CountingReport counting_chain(const Graph& g, const PathPartition& p, const Layering& l);

}  // namespace pathpart

#endif  // PATHPART_BOUNDS_HPP
