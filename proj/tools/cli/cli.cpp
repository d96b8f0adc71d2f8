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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pathpart/bounds.hpp"
#include "pathpart/corpus.hpp"
#include "pathpart/exact.hpp"
#include "pathpart/generators.hpp"
#include "pathpart/io.hpp"
#include "pathpart/layering.hpp"
#include "pathpart/moves.hpp"
#include "report_json.hpp"

namespace pathpart::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A check failed; the report has already been printed.
struct CheckFailure {};

std::string set_text(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  return out + "}";
}

std::string potential_text(const Potential& p) {
  return "(" + std::to_string(p.path_count) + ", " + std::to_string(p.p1) + ", " +
         std::to_string(p.p2) + ")";
}

std::string optional_rational(const std::optional<Rational>& r) {
  return r ? to_string(*r) : "n/a";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

CorpusSpec spec_from_input(const std::string& text, std::uint64_t seed) {
  CorpusSpec spec = parse_generator_spec(text);
  if (text.find("seed=") == std::string::npos) spec.seed = seed;
  return spec;
}

Graph load_graph(const RunConfig& c, std::istream& in) {
  if (c.input.rfind("gen:", 0) == 0) return generate(spec_from_input(c.input.substr(4), c.seed));
  if (c.input == "-") {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_graph(text);
  }
  return parse_graph(read_text(c.input));
}

PathPartition load_partition(const std::string& path, std::istream& in) {
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_partition(text);
  }
  return read_partition(path);
}

std::size_t steps_for(const RunConfig& c, const Graph& g) {
  return c.max_steps.value_or(default_max_steps(g));
}

void print_claims_text(std::ostream& out, const ClaimReport& claims) {
  if (!claims.min_degree_ok) {
    out << "claims: skipped (minimum degree below 2)\n";
    return;
  }
  if (claims.short_paths_absent) out << "claims: no paths of order 1 or 2, |P| <= n/3\n";
  for (const auto& ch : claims.checks) {
    out << "claim " << ch.name << ": " << (ch.passed ? "pass" : "FAIL");
    if (!ch.passed) out << " (" << ch.detail << ")";
    out << '\n';
  }
  if (!claims.x_w_disjoint) out << "claim X∩W=∅: FAIL\n";
}

bool claims_failed(const ClaimReport& claims) {
  return claims.fixpoint && claims.min_degree_ok && !claims.all_passed();
}

int cmd_exact(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(c, in);
  const ExactResult r = exact_mu(g, c.exact_limit);
  if (c.format == Format::Json) {
    Json j;
    j["command"] = "exact";
    j["n"] = g.order();
    j["limit"] = c.exact_limit;
    j["mu"] = r.mu;
    j["explored_states"] = r.explored_states;
    j["witness"] = to_json(r.witness);
    print_json(out, j);
  } else {
    out << "mu = " << r.mu << '\n' << serialize_partition(r.witness);
  }
  return kOk;
}

int cmd_solve(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(c, in);
  const PathPartition start = greedy_initial(g);
  const SearchResult r = local_search(g, start, steps_for(c, g));
  const Layering l = build_layering(g, r.partition);
  const ClaimReport claims = assert_fixpoint_claims(g, r.partition, l);
  if (c.format == Format::Json) {
    Json j;
    j["command"] = "solve";
    j["n"] = g.order();
    j["greedy_paths"] = start.path_count();
    j["paths"] = r.partition.path_count();
    j["potential"] = to_json(potential(r.partition));
    j["steps"] = r.trace.steps.size();
    j["fixpoint"] = r.trace.fixpoint_reached;
    j["claims"] = to_json(claims);
    j["partition"] = to_json(r.partition);
    print_json(out, j);
  } else {
    out << "paths = " << r.partition.path_count() << '\n'
        << "potential = " << potential_text(potential(r.partition)) << '\n'
        << "greedy_paths = " << start.path_count() << '\n'
        << "steps = " << r.trace.steps.size() << '\n'
        << "fixpoint = " << (r.trace.fixpoint_reached ? "yes" : "no") << '\n';
    print_claims_text(out, claims);
    out << "partition:\n" << serialize_partition(r.partition);
  }
  return r.trace.fixpoint_reached && !claims_failed(claims) ? kOk : kCheckFailed;
}

int cmd_verify(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(c, in);
  PathPartition p;
  if (c.partition) {
    p = load_partition(*c.partition, in);
    if (const auto v = validate_partition(g, p); !v.ok()) {
      throw UsageError("partition does not fit the graph: " + v.message);
    }
  } else {
    p = local_search(g, greedy_initial(g), steps_for(c, g)).partition;
  }
  if (g.order() == 0) throw UsageError("empty graph");
  const BoundReport bound = check_bound(g, p);
  const Layering l = build_layering(g, p);
  const ClaimReport claims = assert_fixpoint_claims(g, p, l);
  const CountingReport counting = counting_chain(g, p, l);
  const EpsilonSandwich eps = epsilon_sandwich(g, p, l);
  std::optional<ExactResult> exact;
  std::optional<BoundReport> exact_bound;
  if (c.with_exact) {
    exact = exact_mu(g, c.exact_limit);
    exact_bound = check_bound(g, exact->mu);
  }

  bool failed = bound.verdict == Verdict::Fail || claims_failed(claims) ||
                (counting.preconditions_met && !counting.all_ok());
  if (exact_bound && exact_bound->verdict == Verdict::Fail) failed = true;

  if (c.format == Format::Json) {
    Json j;
    j["command"] = "verify";
    j["bound"] = to_json(bound);
    j["counting"] = to_json(counting);
    j["epsilon"] = to_json(eps);
    j["claims"] = to_json(claims);
    j["exact_mu"] = exact ? Json(exact->mu) : Json(nullptr);
    j["partition"] = to_json(p);
    j["status"] = failed ? "fail" : "pass";
    print_json(out, j);
  } else {
    out << "n = " << bound.n << ", delta = " << bound.delta << ", Delta = " << bound.Delta
        << ", k = " << optional_rational(bound.k) << '\n'
        << "partition_size = " << bound.partition_size << '\n'
        << "theorem_value = " << optional_rational(bound.theorem_value) << '\n'
        << "verdict: " << to_string(bound.verdict) << (bound.tight ? " (tight)" : "") << '\n'
        << "conjecture_value = " << to_string(bound.conjecture_value) << '\n'
        << "conjecture: " << to_string(bound.conjecture_verdict)
        << (bound.conjecture_empirical ? " (empirical)" : "") << '\n';
    if (exact) {
      out << "exact mu = " << exact->mu << ", verdict: " << to_string(exact_bound->verdict)
          << (exact_bound->tight ? " (tight)" : "") << '\n';
    }
    out << "epsilon: " << eps.lower << " <= " << eps.actual << " <= " << eps.upper
        << (eps.holds() ? "" : "  FAIL") << '\n';
    if (counting.short_paths_absent) {
      out << "counting: no paths of order 1 or 2, |P| <= n/3\n";
    } else if (counting.degenerate) {
      out << "counting: degenerate, p3+p4+p5 = 0 over P'\n";
    } else {
      out << "counting: r = " << optional_rational(counting.r) << ", n1 = " << counting.n1
          << ", n2 = " << counting.n2 << ", p = " << counting.p << '\n';
    }
    out << "claim4 " << (counting.claim4_ok ? "ok" : "no") << ", claim5 "
        << (counting.claim5_ok ? "ok" : "no") << ", p_bound " << (counting.p_bound_ok ? "ok" : "no")
        << ", final " << (counting.final_ok ? "ok" : "no")
        << (counting.preconditions_met ? "" : " (preconditions not met)") << '\n';
    print_claims_text(out, claims);
    out << "status: " << (failed ? "fail" : "pass") << '\n';
  }
  if (failed) throw CheckFailure{};
  return kOk;
}

int cmd_layer(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(c, in);
  const PathPartition p = c.partition ? load_partition(*c.partition, in) : greedy_initial(g);
  if (const auto v = validate_partition(g, p); !v.ok()) {
    throw UsageError("partition does not fit the graph: " + v.message);
  }
  const Layering l = build_layering(g, p);
  if (c.format == Format::Json) {
    Json j;
    j["command"] = "layer";
    j["partition"] = to_json(p);
    j.update(layering_json(g, p, l));
    print_json(out, j);
    return kOk;
  }
  out << "depth = " << l.depth() << '\n';
  for (std::size_t t = 0; t < l.depth(); ++t) {
    out << "X_" << t + 1 << " = " << set_text(l.x_layers[t]) << '\n';
    out << "W_" << t + 1 << " = " << set_text(l.w_layers[t]) << '\n';
  }
  for (Vertex w : l.w_union) {
    out << "alpha(" << w << ") =";
    try {
      for (auto [x, v] : alpha_sequence(l, p, w).steps) out << " (" << x << "," << v << ")";
    } catch (const std::exception& e) {
      out << " unavailable: " << e.what();
    }
    out << '\n';
  }
  const GoodOrderSplit split = classify_good_order(g, p, l);
  out << "W_a = " << set_text(split.good) << '\n' << "W_b = " << set_text(split.bad) << '\n';
  out << "P' =";
  for (std::size_t i : l.prime_paths) out << ' ' << i;
  out << '\n';
  return kOk;
}

int cmd_trace(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(c, in);
  const SearchResult r = local_search(g, greedy_initial(g), steps_for(c, g));
  for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
    out << to_json(r.trace.steps[i], i + 1).dump() << '\n';
  }
  Json summary;
  summary["paths"] = r.partition.path_count();
  summary["potential"] = to_json(potential(r.partition));
  summary["steps"] = r.trace.steps.size();
  summary["fixpoint"] = r.trace.fixpoint_reached;
  out << Json{{"summary", summary}}.dump() << '\n';
  return r.trace.fixpoint_reached ? kOk : kCheckFailed;
}

std::size_t single_value(const std::string& name, const std::string& text) {
  if (text.empty()) return 0;
  try {
    std::size_t used = 0;
    const std::size_t v = std::stoul(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + name + " expects an integer, got '" + text + "'");
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  CorpusSpec spec;
  if (c.input.rfind("gen:", 0) == 0) {
    spec = spec_from_input(c.input.substr(4), c.seed);
  } else if (!c.family.empty()) {
    spec.family = parse_family(c.family);
    spec.n = single_value("n", c.n);
    spec.delta = single_value("delta", c.delta);
    spec.Delta = single_value("Delta", c.Delta);
    spec.m = c.m.empty() ? 1 : single_value("m", c.m);
    spec.seed = c.seed;
  } else {
    throw UsageError("generate needs --family or a gen: spec");
  }
  if (spec.family == Family::Fixture) {
    out << fixture_text(figure1_fixture());
    return kOk;
  }
  const Graph g = generate(spec);
  if (c.format == Format::Json) {
    Json j;
    j["key"] = instance_key(spec);
    j["n"] = g.order();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    print_json(out, j);
  } else {
    out << "# " << instance_key(spec) << '\n' << serialize_edge_list(g);
  }
  return kOk;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  std::string manifest;
  if (c.manifest) {
    manifest = read_text(*c.manifest);
  } else if (!c.family.empty()) {
    manifest = "family=" + c.family;
    if (!c.n.empty()) manifest += " n=" + c.n;
    if (!c.delta.empty()) manifest += " delta=" + c.delta;
    if (!c.Delta.empty()) manifest += " Delta=" + c.Delta;
    if (!c.m.empty()) manifest += " m=" + c.m;
    manifest += " seeds=" + std::to_string(c.seeds);
  } else {
    throw UsageError("sweep needs --manifest or --family");
  }
  const std::vector<CorpusSpec> corpus = parse_manifest(manifest);
  SweepOptions options;
  options.exact_limit = c.exact_limit;
  options.max_steps = c.max_steps;
  options.threads = c.threads;
  const SweepSummary summary = run_sweep(corpus, options);

  if (c.format == Format::Json) {
    print_json(out, to_json(summary));
  } else {
    out << "instances = " << summary.instances.size() << '\n';
    for (const auto& [name, t] : summary.tallies) {
      out << "check " << name << ": " << t.passed << " passed, " << t.failed << " failed\n";
    }
    out << "errors = " << summary.errors << '\n';
    for (const auto& inst : summary.instances) {
      if (!inst.error.empty()) out << "ERROR " << inst.key << ": " << inst.error << '\n';
      for (const auto& ch : inst.checks) {
        if (!ch.passed) out << "FAIL " << inst.key << ": " << ch.name << " " << ch.detail << '\n';
      }
    }
    out << "failures = " << summary.failures() << '\n';
  }
  return summary.failures() == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "exact") return cmd_exact(config, in, out);
    if (config.command == "solve") return cmd_solve(config, in, out);
    if (config.command == "verify") return cmd_verify(config, in, out);
    if (config.command == "layer") return cmd_layer(config, in, out);
    if (config.command == "trace") return cmd_trace(config, in, out);
    if (config.command == "generate") return cmd_generate(config, out);
    if (config.command == "sweep") return cmd_sweep(config, out);
    err << "error: unknown command '" << config.command << "'\n";
    return kUsageError;
  } catch (const CheckFailure&) {
    return kCheckFailed;
  } catch (const ExactLimitExceeded& e) {
    err << "error: " << e.what() << "; raise --limit (at most " << kMaxExactLimit << ")\n";
    return kOversize;
  } catch (const InfeasibleParameters& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig c;
  std::string format = "text";

  CLI::App app{"Path partitions of graphs with bounded degrees", "pathpart"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--limit", c.exact_limit, "Largest n for the exact solver")
      ->capture_default_str();
  app.add_option("--max-steps", c.max_steps, "Local search step budget (default 10n)");
  app.add_option("--seed", c.seed, "Seed for generators")->capture_default_str();

  auto input_option = [&](CLI::App* sub) {
    sub->add_option("input", c.input, "Graph file, '-' for stdin, or gen:<family>:k=v,...")
        ->capture_default_str();
  };
  auto* exact = app.add_subcommand("exact", "Minimum path partition by subset DP");
  input_option(exact);
  auto* solve = app.add_subcommand("solve", "Greedy start and local search to a fixpoint");
  input_option(solve);
  auto* verify = app.add_subcommand("verify", "Bound, claim and counting reports");
  input_option(verify);
  verify->add_option("--partition", c.partition, "Partition file to verify instead of solving");
  verify->add_flag("--exact", c.with_exact, "Also check the exact optimum");
  auto* layer = app.add_subcommand("layer", "Print X/W layers and alpha-sequences");
  input_option(layer);
  layer->add_option("--partition", c.partition, "Partition file (default: greedy start)");
  auto* trace = app.add_subcommand("trace", "Local search with a JSON-lines move trace");
  input_option(trace);

  auto family_options = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "bipartite_copies, clique_copies, random_bounded, "
                                          "random_cubic or fixture");
    sub->add_option("--n", c.n, "Vertex count");
    sub->add_option("--delta", c.delta, "Minimum degree");
    sub->add_option("--Delta", c.Delta, "Maximum degree");
    sub->add_option("--m", c.m, "Number of copies");
  };
  auto* generate = app.add_subcommand("generate", "Emit a generated graph as an edge list");
  generate->add_option("spec", c.input, "gen:<family>:k=v,... (alternative to the flags)");
  family_options(generate);
  auto* sweep = app.add_subcommand("sweep", "Run checks over a seeded corpus");
  family_options(sweep);
  sweep->add_option("--seeds", c.seeds, "Seeds 0..seeds-1 per parameter set")->capture_default_str();
  sweep->add_option("--manifest", c.manifest, "Manifest file");
  sweep->add_option("--threads", c.threads, "Worker threads (0: all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.format = format == "json" ? Format::Json : Format::Text;
  if (c.command == "generate" && c.input == "-") c.input.clear();
  return run(c, in, out, err);
}

}  // namespace pathpart::cli
