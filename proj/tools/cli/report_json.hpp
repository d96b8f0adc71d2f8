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

#ifndef PATHPART_TOOLS_REPORT_JSON_HPP
#define PATHPART_TOOLS_REPORT_JSON_HPP

#include <json.hpp>

#include "pathpart/bounds.hpp"
#include "pathpart/corpus.hpp"
#include "pathpart/exact.hpp"
#include "pathpart/layering.hpp"
#include "pathpart/moves.hpp"

namespace pathpart::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const std::optional<Rational>& r);
Json to_json(const PathPartition& p);
Json to_json(const Potential& p);
Json to_json(const BoundReport& r);
Json to_json(const CountingReport& r);
Json to_json(const EpsilonSandwich& e);
Json to_json(const ClaimReport& r);
Json to_json(const Rewrite& m);
Json to_json(const TraceStep& s, std::size_t index);
Json to_json(const PartitionStats& s);
Json to_json(const InstanceResult& r);
Json to_json(const SweepSummary& s);

/// Layers, back edges, alpha-sequences of every W vertex and the W_a/W_b split.
Json layering_json(const Graph& g, const PathPartition& p, const Layering& l);

}  // namespace pathpart::cli

#endif  // PATHPART_TOOLS_REPORT_JSON_HPP
