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

#include "pathpart/bounds.hpp"

#include <stdexcept>

#include "pathpart/moves.hpp"

namespace pathpart {
namespace {

using I = std::int64_t;

I as_int(std::size_t v) { return static_cast<I>(v); }

// (Δ−δ)/(Δ+δ), which is (k−1)/(k+1) for k = Δ/δ.
Rational theorem_ratio(std::size_t delta, std::size_t Delta) {
  return Rational(as_int(Delta) - as_int(delta), as_int(Delta) + as_int(delta));
}

// Orders and W-counts of the paths of P'.
struct PrimeCounts {
  std::size_t p1 = 0, p2 = 0, p3 = 0, p4 = 0, p5 = 0, longer = 0;
  std::size_t p4_one_w = 0, p4_two_w = 0;
  std::size_t paths = 0, vertices = 0;
};

PrimeCounts count_prime(const PathPartition& p, const Layering& l) {
  PrimeCounts c;
  for (std::size_t idx : l.prime_paths) {
    const Path& path = p.path(idx);
    ++c.paths;
    c.vertices += path.size();
    switch (path.size()) {
      case 1: ++c.p1; break;
      case 2: ++c.p2; break;
      case 3: ++c.p3; break;
      case 4: {
        ++c.p4;
        std::size_t in_w = 0;
        for (Vertex v : path) in_w += l.in_w(v) ? 1 : 0;
        if (in_w >= 2) ++c.p4_two_w;
        else ++c.p4_one_w;
        break;
      }
      case 5: ++c.p5; break;
      default: ++c.longer; break;
    }
  }
  return c;
}

std::size_t w_neighbors(const Graph& g, const Layering& l, Vertex x) {
  std::size_t c = 0;
  for (Vertex u : g.neighbors(x)) c += l.in_w(u) ? 1 : 0;
  return c;
}

// Per-path lower bound on ε(ends, W) together with the check that the ends meet it.
struct LowerTerm {
  std::size_t bound = 0;
  bool met = true;
};

LowerTerm claim4_term(const Graph& g, const Path& path, const Layering& l) {
  LowerTerm t;
  const Vertex a = path.front();
  const Vertex b = path.back();
  const std::size_t da = g.degree(a);
  const std::size_t db = g.degree(b);
  auto single = [&](Vertex x, std::size_t need) {
    t.bound += need;
    if (w_neighbors(g, l, x) < need) t.met = false;
  };
  switch (path.size()) {
    case 1:
      single(a, da);
      break;
    case 2:
    case 5:
      single(a, da == 0 ? 0 : da - 1);
      single(b, db == 0 ? 0 : db - 1);
      break;
    case 3:
      single(a, da);
      single(b, db);
      break;
    case 4: {
      std::size_t in_w = 0;
      for (Vertex v : path) in_w += l.in_w(v) ? 1 : 0;
      const std::size_t need = da + db - (in_w >= 2 ? 0 : 1);
      t.bound += need;
      if (w_neighbors(g, l, a) + w_neighbors(g, l, b) < need) t.met = false;
      break;
    }
    default:
      t.met = false;  // no path of order above five belongs to P' at a fixpoint
      break;
  }
  return t;
}

bool disjoint_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i;
    else ++j;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rational> theorem_bound(std::size_t n, std::size_t delta, std::size_t Delta) {
  if (delta < 2 || Delta < 2 * delta) return std::nullopt;
  return theorem_ratio(delta, Delta) * as_int(n);
}

ConjectureBound conjecture_bound(std::size_t n, std::size_t delta, std::size_t Delta) {
  ConjectureBound b;
  b.isolated_vertices = delta == 0;
  const Rational regular(as_int(n), as_int(delta) + 1);
  b.value = regular;
  if (Delta >= delta) {
    const Rational spread = theorem_ratio(delta, Delta) * as_int(n);
    if (spread > b.value) b.value = spread;
  }
  return b;
}

std::size_t cubic_bound(std::size_t n, bool two_connected) {
  if (n < 4) throw std::invalid_argument("cubic bound needs n >= 4");
  const std::size_t d = two_connected ? 10 : 9;
  return (n + d - 1) / d;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

BoundReport check_bound(const Graph& g, std::size_t partition_size) {
  BoundReport r;
  r.n = g.order();
  r.partition_size = partition_size;
  if (r.n == 0) {
    r.conjecture_value = Rational(0);
    r.conjecture_verdict = partition_size == 0 ? Verdict::Pass : Verdict::Fail;
    return r;
  }
  const DegreeProfile prof = degree_profile(g);
  r.delta = prof.min_degree;
  r.Delta = prof.max_degree;
  if (r.delta > 0) r.k = Rational(as_int(r.Delta), as_int(r.delta));
  r.preconditions_met = r.delta >= 2 && r.Delta >= 2 * r.delta;
  r.conjecture_empirical = !r.preconditions_met;
  r.theorem_value = theorem_bound(r.n, r.delta, r.Delta);
  r.conjecture_value = conjecture_bound(r.n, r.delta, r.Delta).value;

  const I size = as_int(partition_size);
  if (r.theorem_value) {
    // size ≤ (Δ−δ)n/(Δ+δ) by cross-multiplication.
    const I lhs = size * (as_int(r.Delta) + as_int(r.delta));
    const I rhs = (as_int(r.Delta) - as_int(r.delta)) * as_int(r.n);
    r.verdict = lhs <= rhs ? Verdict::Pass : Verdict::Fail;
    r.tight = lhs == rhs;
  }
  r.conjecture_verdict = Rational(size) <= r.conjecture_value ? Verdict::Pass : Verdict::Fail;
  return r;
}

BoundReport check_bound(const Graph& g, const PathPartition& p) {
  return check_bound(g, p.path_count());
}

EpsilonSandwich epsilon_sandwich(const Graph& g, const PathPartition& p, const Layering& l) {
  if (l.fingerprint != partition_fingerprint(p)) {
    throw StaleLayering("layering does not match the partition");
  }
  EpsilonSandwich s;
  s.fixpoint = !first_move(g, p, l).has_value();
  s.x_w_disjoint = disjoint_sorted(l.x_union, l.w_union);
  s.actual = external_edge_count(g, l.x_union, l.w_union);
  if (l.w_union.empty()) return s;

  const std::size_t Delta = degree_profile(g).max_degree;
  const PrimeCounts c = count_prime(p, l);
  s.upper = c.p3 * Delta + c.p4_one_w * (Delta - 1) + 4 * c.p4_two_w +
            c.p5 * (Delta >= 2 ? Delta - 2 : 0);
  for (std::size_t idx : l.prime_paths) s.lower += claim4_term(g, p.path(idx), l).bound;
  return s;
}

CountingReport counting_chain(const Graph& g, const PathPartition& p, const Layering& l) {
  const EpsilonSandwich eps = epsilon_sandwich(g, p, l);
  CountingReport r;
  r.fixpoint = eps.fixpoint;
  r.epsilon_lower = eps.lower;
  r.epsilon_upper = eps.upper;
  r.epsilon_actual = eps.actual;
  r.partition_size = p.path_count();

  const std::size_t n = g.order();
  if (n == 0) return r;
  const DegreeProfile prof = degree_profile(g);
  const std::size_t delta = prof.min_degree;
  const std::size_t Delta = prof.max_degree;
  r.preconditions_met = r.fixpoint && delta >= 2 && Delta >= 2 * delta;
  if (delta > 0) r.k = Rational(as_int(Delta), as_int(delta));

  const PrimeCounts c = count_prime(p, l);
  r.p = c.paths;
  r.n1 = c.vertices;
  r.n2 = n - c.vertices;
  r.short_paths_absent = c.p1 + c.p2 == 0;

  bool claim4_terms = true;
  for (std::size_t idx : l.prime_paths) claim4_terms = claim4_term(g, p.path(idx), l).met && claim4_terms;
  r.claim4_ok = claim4_terms && eps.holds() && eps.x_w_disjoint;

  const Rational ratio = delta + Delta > 0 ? theorem_ratio(delta, Delta) : Rational(0);
  const std::size_t q = c.p3 + c.p4 + c.p5;
  if (delta == 0) {
    r.claim5_ok = false;
  } else {
    const Rational lhs = Rational(as_int(c.p1 + 2 * c.p2));
    const Rational two_over_delta(2, as_int(delta));
    const Rational rhs = (*r.k - 2) * as_int(q) + two_over_delta * as_int(c.p2);
    r.claim5_ok = lhs <= rhs;
    if (q > 0) {
      r.r = (lhs - two_over_delta * as_int(c.p2)) / as_int(q);
    } else {
      r.degenerate = c.p1 + 2 * c.p2 > 0;
    }
  }
  r.p_bound_ok = c.longer == 0 && Rational(as_int(r.p)) <= ratio * as_int(r.n1);

  bool outside_long = true;
  std::vector<char> prime(p.path_count(), 0);
  for (std::size_t idx : l.prime_paths) prime[idx] = 1;
  std::size_t outside = 0;
  for (std::size_t i = 0; i < p.path_count(); ++i) {
    if (prime[i]) continue;
    ++outside;
    if (p.path(i).size() < 3) outside_long = false;
  }
  // |P \ P'| ≤ n2/3 ≤ (k−1)/(k+1)·n2 when k >= 2, and |P| ≤ (k−1)/(k+1)·n.
  r.final_ok = outside_long && 3 * outside <= r.n2 &&
               Rational(as_int(r.partition_size)) <= ratio * as_int(n);
  return r;
}

}  // namespace pathpart
