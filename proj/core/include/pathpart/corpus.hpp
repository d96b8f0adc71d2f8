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

#ifndef PATHPART_CORPUS_HPP
#define PATHPART_CORPUS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathpart/exact.hpp"
#include "pathpart/generators.hpp"

namespace pathpart {

// Manifest text: one entry per line, "#" comments. Each entry is a list of
// key=value tokens; integer values may be ranges "a..b". Example:
//
//   family=random_bounded n=8..14 delta=2 Delta=5 seeds=50
//
// Keys: family, n, delta, Delta, m, seeds (count, seeds 0..count-1), seed
// (single seed or range). Ranges expand to their cartesian product; entries
// with Delta < delta or an odd cubic n are skipped.
std::vector<CorpusSpec> parse_manifest(std::string_view text);

struct SweepOptions {
  std::size_t exact_limit = kDefaultExactLimit;
  std::optional<std::size_t> max_steps;  // default 10n
  std::size_t threads = 0;               // 0: hardware concurrency
};

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct InstanceResult {
  std::string key;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::size_t Delta = 0;
  std::optional<std::size_t> mu;  // unset when n exceeds the exact limit
  std::size_t greedy_paths = 0;
  std::size_t fixpoint_paths = 0;
  std::size_t steps = 0;
  bool theorem_applies = false;
  std::vector<CheckOutcome> checks;
  std::string error;  // generator failure

  bool passed() const;
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SweepSummary {
  std::vector<InstanceResult> instances;  // sorted by key
  std::map<std::string, CheckTally> tallies;
  std::size_t errors = 0;

  std::size_t failures() const;
};

/// Runs every check that applies to the generated graph.
InstanceResult evaluate_instance(const CorpusSpec& spec, const SweepOptions& options = {});

SweepSummary run_sweep(const std::vector<CorpusSpec>& corpus, const SweepOptions& options = {});

}  // namespace pathpart

#endif  // PATHPART_CORPUS_HPP
