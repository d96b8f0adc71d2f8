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

#ifndef PATHPART_TESTS_VIOLATIONS_HPP
#define PATHPART_TESTS_VIOLATIONS_HPP

#include <string>
#include <vector>

#include "pathpart/graph.hpp"
#include "pathpart/partition.hpp"

namespace pathpart::testing {

/// A partition built to break one structural fixpoint claim.
struct ClaimViolation {
  std::string claim;  // C1a, C1b, C2a, C2b, C3
  std::string description;
  Graph graph;
  PathPartition partition;
};

std::vector<ClaimViolation> claim_violations();

}  // namespace pathpart::testing

#endif  // PATHPART_TESTS_VIOLATIONS_HPP
