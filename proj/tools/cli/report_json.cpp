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

#include "report_json.hpp"

namespace pathpart::cli {
namespace {

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const std::optional<Rational>& r) { return r ? to_json(*r) : Json(nullptr); }

Json to_json(const PathPartition& p) {
  Json out = Json::array();
  for (const Path& path : p.paths()) out.push_back(path);
  return out;
}

Json to_json(const Potential& p) { return {p.path_count, p.p1, p.p2}; }

Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["Delta"] = r.Delta;
  j["k"] = to_json(r.k);
  j["theorem_value"] = to_json(r.theorem_value);
  j["conjecture_value"] = to_json(r.conjecture_value);
  j["preconditions_met"] = r.preconditions_met;
  j["partition_size"] = r.partition_size;
  j["verdict"] = to_string(r.verdict);
  j["tight"] = r.tight;
  j["conjecture_verdict"] = to_string(r.conjecture_verdict);
  j["conjecture_regime"] = r.conjecture_empirical ? "empirical" : "theorem";
  return j;
}

Json to_json(const CountingReport& r) {
  Json j;
  j["fixpoint"] = r.fixpoint;
  j["preconditions_met"] = r.preconditions_met;
  j["short_paths_absent"] = r.short_paths_absent;
  j["degenerate"] = r.degenerate;
  j["r"] = to_json(r.r);
  j["k"] = to_json(r.k);
  j["n1"] = r.n1;
  j["n2"] = r.n2;
  j["p"] = r.p;
  j["partition_size"] = r.partition_size;
  j["epsilon_lower"] = r.epsilon_lower;
  j["epsilon_actual"] = r.epsilon_actual;
  j["epsilon_upper"] = r.epsilon_upper;
  j["claim4_ok"] = r.claim4_ok;
  j["claim5_ok"] = r.claim5_ok;
  j["p_bound_ok"] = r.p_bound_ok;
  j["final_ok"] = r.final_ok;
  return j;
}

Json to_json(const EpsilonSandwich& e) {
  Json j;
  j["lower"] = e.lower;
  j["actual"] = e.actual;
  j["upper"] = e.upper;
  j["holds"] = e.holds();
  j["fixpoint"] = e.fixpoint;
  j["x_w_disjoint"] = e.x_w_disjoint;
  return j;
}

Json to_json(const ClaimReport& r) {
  Json j;
  j["fixpoint"] = r.fixpoint;
  j["min_degree_ok"] = r.min_degree_ok;
  j["short_paths_absent"] = r.short_paths_absent;
  j["x_w_disjoint"] = r.x_w_disjoint;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["all_passed"] = r.all_passed();
  return j;
}

Json to_json(const Rewrite& m) {
  Json j;
  j["kind"] = to_string(m.kind);
  j["removed"] = edges_json(m.edges_removed);
  j["added"] = edges_json(m.edges_added);
  j["paths_touched"] = m.paths_touched;
  return j;
}

Json to_json(const TraceStep& s, std::size_t index) {
  Json j;
  j["step"] = index;
  j["kind"] = to_string(s.move.kind);
  j["removed"] = edges_json(s.move.edges_removed);
  j["added"] = edges_json(s.move.edges_added);
  j["before"] = to_json(s.before);
  j["after"] = to_json(s.after);
  return j;
}

Json to_json(const PartitionStats& s) {
  Json j;
  j["scope"] = s.scope == StatsScope::Prime ? "prime" : "partition";
  j["path_count"] = s.path_count;
  j["vertex_count"] = s.vertex_count;
  Json orders = Json::object();
  for (auto [order, count] : s.order_counts) orders[std::to_string(order)] = count;
  j["order_counts"] = std::move(orders);
  j["singletons"] = s.singletons;
  j["pair_ends"] = s.pair_ends;
  j["centers3"] = s.centers3;
  j["centers5"] = s.centers5;
  j["interior4"] = s.interior4;
  return j;
}

Json to_json(const InstanceResult& r) {
  Json j;
  j["key"] = r.key;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["Delta"] = r.Delta;
  j["mu"] = optional_size(r.mu);
  j["greedy_paths"] = r.greedy_paths;
  j["fixpoint_paths"] = r.fixpoint_paths;
  j["steps"] = r.steps;
  j["passed"] = r.passed();
  if (!r.error.empty()) j["error"] = r.error;
  Json failed = Json::array();
  for (const auto& c : r.checks) {
    if (!c.passed) failed.push_back({{"check", c.name}, {"detail", c.detail}});
  }
  j["failed_checks"] = std::move(failed);
  return j;
}

Json to_json(const SweepSummary& s) {
  Json j;
  j["instances"] = s.instances.size();
  j["errors"] = s.errors;
  j["failures"] = s.failures();
  Json tallies = Json::object();
  for (const auto& [name, t] : s.tallies) tallies[name] = {{"passed", t.passed}, {"failed", t.failed}};
  j["checks"] = std::move(tallies);
  Json bad = Json::array();
  for (const auto& inst : s.instances) {
    if (!inst.passed()) bad.push_back(to_json(inst));
  }
  j["failing_instances"] = std::move(bad);
  return j;
}

Json layering_json(const Graph& g, const PathPartition& p, const Layering& l) {
  Json j;
  j["depth"] = l.depth();
  j["x_layers"] = l.x_layers;
  j["w_layers"] = l.w_layers;
  Json alphas = Json::array();
  for (Vertex w : l.w_union) {
    Json a;
    a["w"] = w;
    a["layer"] = l.w_layer_of[w];
    try {
      const AlphaSequence seq = alpha_sequence(l, p, w);
      Json steps = Json::array();
      for (auto [x, v] : seq.steps) steps.push_back({x, v});
      a["steps"] = std::move(steps);
    } catch (const std::exception& e) {
      a["steps"] = nullptr;
      a["error"] = e.what();
    }
    alphas.push_back(std::move(a));
  }
  j["alpha_sequences"] = std::move(alphas);
  const GoodOrderSplit split = classify_good_order(g, p, l);
  j["good_order"] = split.good;
  j["bad_order"] = split.bad;
  j["prime_paths"] = l.prime_paths;
  return j;
}

}  // namespace pathpart::cli
