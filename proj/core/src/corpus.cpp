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

#include "pathpart/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "pathpart/bounds.hpp"
#include "pathpart/layering.hpp"
#include "pathpart/moves.hpp"
#include "pathpart/partition.hpp"

namespace pathpart {
namespace {

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

std::size_t parse_number(std::string_view s, std::size_t line) {
  std::size_t out = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("manifest line " + std::to_string(line) + ": bad number '" +
                                std::string(s) + "'");
  }
  return out;
}

Range parse_range(std::string_view s, std::size_t line) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const std::size_t v = parse_number(s, line);
    return {v, v};
  }
  Range r{parse_number(s.substr(0, dots), line), parse_number(s.substr(dots + 2), line)};
  if (r.lo > r.hi) {
    throw std::invalid_argument("manifest line " + std::to_string(line) + ": empty range '" +
                                std::string(s) + "'");
  }
  return r;
}

// Fields that the family ignores are zeroed so duplicates collapse.
CorpusSpec normalized(CorpusSpec s) {
  switch (s.family) {
    case Family::BipartiteCopies:
      s.n = 0;
      s.seed = 0;
      break;
    case Family::CliqueCopies:
      s.n = 0;
      s.Delta = 0;
      s.seed = 0;
      break;
    case Family::RandomBounded:
      s.m = 0;
      break;
    case Family::RandomCubic:
      s.m = s.delta = s.Delta = 0;
      break;
    case Family::Fixture:
      s = CorpusSpec{Family::Fixture};
      break;
  }
  return s;
}

void add(InstanceResult& r, std::string name, bool passed, std::string detail = {}) {
  r.checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(detail)});
}

bool trace_decreases(const SearchTrace& trace, const Potential& start) {
  Potential current = start;
  for (const auto& step : trace.steps) {
    if (!(step.before == current) || !(step.after < step.before)) return false;
    current = step.after;
  }
  return true;
}

}  // namespace

std::vector<CorpusSpec> parse_manifest(std::string_view text) {
  std::vector<CorpusSpec> out;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::optional<Family> family;
    Range n{0, 0}, delta{0, 0}, Delta{0, 0}, m{1, 1}, seeds{0, 0};
    bool any = false;
    for (std::string tok; tokens >> tok;) {
      any = true;
      const auto eq = tok.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("manifest line " + std::to_string(line_no) +
                                    ": expected key=value, got '" + tok + "'");
      }
      const std::string key = tok.substr(0, eq);
      const std::string_view value = std::string_view(tok).substr(eq + 1);
      if (key == "family") family = parse_family(value);
      else if (key == "n") n = parse_range(value, line_no);
      else if (key == "delta") delta = parse_range(value, line_no);
      else if (key == "Delta") Delta = parse_range(value, line_no);
      else if (key == "m") m = parse_range(value, line_no);
      else if (key == "seed") seeds = parse_range(value, line_no);
      else if (key == "seeds") {
        const std::size_t count = parse_number(value, line_no);
        if (count == 0) {
          throw std::invalid_argument("manifest line " + std::to_string(line_no) + ": seeds=0");
        }
        seeds = {0, count - 1};
      } else {
        throw std::invalid_argument("manifest line " + std::to_string(line_no) +
                                    ": unknown key '" + key + "'");
      }
    }
    if (!any) continue;
    if (!family) {
      throw std::invalid_argument("manifest line " + std::to_string(line_no) + ": missing family");
    }
    for (std::size_t a = n.lo; a <= n.hi; ++a) {
      for (std::size_t d = delta.lo; d <= delta.hi; ++d) {
        for (std::size_t D = Delta.lo; D <= Delta.hi; ++D) {
          for (std::size_t c = m.lo; c <= m.hi; ++c) {
            for (std::size_t s = seeds.lo; s <= seeds.hi; ++s) {
              CorpusSpec spec{*family, a, d, D, c, s};
              if (*family == Family::BipartiteCopies && D < d) continue;
              if (*family == Family::RandomBounded && D < d) continue;
              if (*family == Family::RandomCubic && a % 2 != 0) continue;
              out.push_back(normalized(spec));
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool InstanceResult::passed() const {
  if (!error.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

std::size_t SweepSummary::failures() const {
  std::size_t f = errors;
  for (const auto& [name, t] : tallies) f += t.failed;
  return f;
}

InstanceResult evaluate_instance(const CorpusSpec& spec, const SweepOptions& options) {
  InstanceResult r;
  r.key = instance_key(spec);
  Graph g;
  try {
    g = generate(spec);
  } catch (const std::exception& e) {
    r.error = e.what();
    return r;
  }
  r.n = g.order();
  const DegreeProfile prof = degree_profile(g);
  r.delta = prof.min_degree;
  r.Delta = prof.max_degree;
  r.theorem_applies = r.delta >= 2 && r.Delta >= 2 * r.delta;

  if (r.n <= std::min(options.exact_limit, kMaxExactLimit)) {
    const ExactResult ex = exact_mu(g, options.exact_limit);
    r.mu = ex.mu;
    const bool witness_ok =
        validate_partition(g, ex.witness).ok() && ex.witness.path_count() == ex.mu;
    add(r, "exact_witness", witness_ok, "witness invalid or of the wrong size");
  }

  const PathPartition greedy = greedy_initial(g);
  r.greedy_paths = greedy.path_count();
  const std::size_t budget = options.max_steps.value_or(default_max_steps(g));
  const SearchResult search = local_search(g, greedy, budget);
  const PathPartition& fix = search.partition;
  r.fixpoint_paths = fix.path_count();
  r.steps = search.trace.steps.size();

  add(r, "search_valid", validate_partition(g, fix).ok(), validate_partition(g, fix).message);
  add(r, "fixpoint_reached", search.trace.fixpoint_reached && r.steps <= default_max_steps(g),
      "no fixpoint within " + std::to_string(budget) + " steps");
  add(r, "trace_monotone", trace_decreases(search.trace, potential(greedy)),
      "potential did not strictly decrease");
  add(r, "search_vs_greedy", r.fixpoint_paths <= r.greedy_paths,
      std::to_string(r.fixpoint_paths) + " > greedy " + std::to_string(r.greedy_paths));
  if (r.mu) {
    add(r, "search_vs_exact", r.fixpoint_paths >= *r.mu,
        std::to_string(r.fixpoint_paths) + " < mu " + std::to_string(*r.mu));
  }

  if (r.theorem_applies) {
    if (r.mu) {
      const BoundReport b = check_bound(g, *r.mu);
      add(r, "theorem", b.verdict == Verdict::Pass,
          "mu " + std::to_string(*r.mu) + " exceeds " + to_string(*b.theorem_value));
    }
    const BoundReport b = check_bound(g, fix);
    add(r, "search_vs_theorem", b.verdict == Verdict::Pass,
        std::to_string(r.fixpoint_paths) + " exceeds " + to_string(*b.theorem_value));
  }

  if (search.trace.fixpoint_reached) {
    const Potential pot = potential(fix);
    if (pot.p1 + pot.p2 == 0) {
      add(r, "n3_branch", 3 * r.fixpoint_paths <= r.n,
          std::to_string(r.fixpoint_paths) + " paths exceed n/3");
    }
  }

  if (search.trace.fixpoint_reached && r.delta >= 2) {
    const Layering l = build_layering(g, fix);
    const ClaimReport claims = assert_fixpoint_claims(g, fix, l);
    std::string detail;
    for (const auto& c : claims.checks) {
      if (!c.passed) detail += c.name + ": " + c.detail + "; ";
    }
    if (!claims.x_w_disjoint) detail += "X and W intersect";
    add(r, "claims", claims.all_passed(), detail);
    if (r.theorem_applies) {
      const EpsilonSandwich eps = epsilon_sandwich(g, fix, l);
      add(r, "epsilon", eps.holds() && eps.x_w_disjoint,
          std::to_string(eps.lower) + " <= " + std::to_string(eps.actual) + " <= " +
              std::to_string(eps.upper) + " fails");
      const CountingReport c = counting_chain(g, fix, l);
      add(r, "counting", c.all_ok(),
          std::string("claim4=") + (c.claim4_ok ? "1" : "0") + " claim5=" +
              (c.claim5_ok ? "1" : "0") + " p_bound=" + (c.p_bound_ok ? "1" : "0") +
              " final=" + (c.final_ok ? "1" : "0"));
    }
  }

  if (spec.family == Family::RandomCubic && r.mu) {
    const std::size_t b9 = cubic_bound(r.n, false);
    add(r, "cubic", *r.mu <= b9, "mu " + std::to_string(*r.mu) + " > " + std::to_string(b9));
    if (is_biconnected(g)) {
      const std::size_t b10 = cubic_bound(r.n, true);
      add(r, "cubic_2conn", *r.mu <= b10,
          "mu " + std::to_string(*r.mu) + " > " + std::to_string(b10));
    }
  }
  if (spec.family == Family::BipartiteCopies && r.mu && spec.Delta >= spec.delta + 2) {
    const std::size_t expected = spec.m * (spec.Delta - spec.delta);
    const Rational formula = Rational(static_cast<std::int64_t>(spec.Delta - spec.delta) *
                                          static_cast<std::int64_t>(r.n),
                                      static_cast<std::int64_t>(spec.Delta + spec.delta));
    add(r, "tight", *r.mu == expected && formula == Rational(static_cast<std::int64_t>(*r.mu)),
        "mu " + std::to_string(*r.mu) + " vs " + to_string(formula));
  }
  if (spec.family == Family::CliqueCopies && r.mu) {
    const Rational conj = conjecture_bound(r.n, r.delta, r.Delta).value;
    add(r, "tight", *r.mu == spec.m && conj == Rational(static_cast<std::int64_t>(*r.mu)),
        "mu " + std::to_string(*r.mu) + " vs " + to_string(conj));
  }
  return r;
}

SweepSummary run_sweep(const std::vector<CorpusSpec>& corpus, const SweepOptions& options) {
  SweepSummary summary;
  summary.instances.resize(corpus.size());
  std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(corpus.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      summary.instances[i] = evaluate_instance(corpus[i], options);
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::sort(summary.instances.begin(), summary.instances.end(),
            [](const InstanceResult& a, const InstanceResult& b) { return a.key < b.key; });
  for (const auto& inst : summary.instances) {
    if (!inst.error.empty()) ++summary.errors;
    for (const auto& c : inst.checks) {
      auto& t = summary.tallies[c.name];
      (c.passed ? t.passed : t.failed) += 1;
    }
  }
  return summary;
}

}  // namespace pathpart
