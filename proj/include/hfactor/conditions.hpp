// Copyright 2026 The hfactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HFACTOR_CONDITIONS_HPP_
#define HFACTOR_CONDITIONS_HPP_

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfactor/error.hpp"
#include "hfactor/graph.hpp"
#include "hfactor/prescription.hpp"
#include "hfactor/search.hpp"

namespace hfactor {

struct ScanOptions {
  // Largest order for which all 2^n subsets S are scanned.
  int max_vertices = 24;
  // Largest order for which all 3^n disjoint pairs (S, T) are scanned.
  int max_pair_vertices = 14;
  int workers = 1;
};

// Outcome of checking o(G - S) <= f(S) over every proper subset S.
struct ConditionReport {
  bool holds = true;
  std::optional<VertexSet> violator;
  // o(G - S) and f(S) at the violator.
  int odd_components = 0;
  long bound = 0;
  // Subsets examined in scan order, up to and including the violator.
  std::uint64_t scanned = 0;
};

// A disjoint pair (S, T) and f(S) - |T| + sum_{x in T} d_{G-S}(x) - q(S,T).
struct CorollaryWitness {
  VertexSet s;
  VertexSet t;
  long value = 0;
};

enum class Verdict {
  kInapplicable,    // order parity or connectivity rules the theorem out
  kVacuous,         // the theorem's hypotheses fail on this instance
  kConsistent,      // hypotheses hold and the conclusion was confirmed
  kCounterexample,  // hypotheses hold and the conclusion was refuted
  kUnknown,         // search budget ran out
};

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kInapplicable:
      return "inapplicable";
    case Verdict::kVacuous:
      return "vacuous";
    case Verdict::kConsistent:
      return "consistent";
    case Verdict::kCounterexample:
      return "COUNTEREXAMPLE";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

struct VerifyReport {
  Verdict verdict = Verdict::kUnknown;
  std::string reason;
  std::optional<ConditionReport> condition;
  std::optional<bool> degree_hypothesis;
  std::optional<FactorResult> factor;
};

namespace detail {

inline void check_weights(const Graph& g, const DegreeFunction& f) {
  if (f.size() != g.order()) {
    throw InputError("degree function has " + std::to_string(f.size()) +
                     " values for a graph of order " + std::to_string(g.order()));
  }
}

inline long weight_sum(const DegreeFunction& f, Mask s) {
  long total = 0;
  for (; s != 0; s &= s - 1) total += f(std::countr_zero(s));
  return total;
}

}  // namespace detail

// Scans S in increasing bitmask order (S = V is skipped; S = {} only when
// include_empty) and reports the first S with o(G - S) > f(S). At most
// 2^max_vertices subsets are examined: a larger graph is answered only if its
// first violator falls inside that prefix of the scan, else BudgetExceeded.
inline ConditionReport check_condition(const Graph& g, const DegreeFunction& f,
                                       bool include_empty,
                                       const ScanOptions& options = {}) {
  detail::check_weights(g, f);
  if (g.order() > 62) {
    throw BudgetExceeded("check_condition: order " + std::to_string(g.order()) +
                         " exceeds 62 vertices");
  }
  const int cap = std::clamp(options.max_vertices, 0, 62);
  const Mask all = g.vertex_mask();
  const Mask first = include_empty ? 0 : 1;
  const bool complete_scan = g.order() <= cap;
  const Mask last = complete_scan ? all : (Mask{1} << cap);  // exclusive
  ConditionReport report;
  if (first >= last) return report;

  const Mask span = last - first;
  const Mask chunks = std::min<Mask>(span, 256);
  std::atomic<Mask> found{last};
  detail::parallel_for(
      options.workers, static_cast<std::size_t>(chunks),
      [&](std::size_t, std::size_t i) {
        const Mask lo = first + span / chunks * i;
        const Mask hi = i + 1 == chunks ? last : first + span / chunks * (i + 1);
        for (Mask s = lo; s < hi; ++s) {
          if (s >= found.load(std::memory_order_relaxed)) return;
          if (masks::odd_components(g, all & ~s) > detail::weight_sum(f, s)) {
            Mask cur = found.load(std::memory_order_relaxed);
            while (s < cur && !found.compare_exchange_weak(cur, s)) {
            }
            return;
          }
        }
      });
  const Mask s = found.load();
  if (s == last) {
    if (!complete_scan) {
      throw BudgetExceeded("check_condition: no violator among the first 2^" +
                           std::to_string(cap) + " subsets of a graph of order " +
                           std::to_string(g.order()));
    }
    report.scanned = span;
    return report;
  }
  report.holds = false;
  report.violator = VertexSet::from_mask(s);
  report.odd_components = masks::odd_components(g, all & ~s);
  report.bound = detail::weight_sum(f, s);
  report.scanned = s - first + 1;
  return report;
}

// d_G(v) >= f(v) - 1 for every v.
inline bool check_degree_hypothesis(const Graph& g, const DegreeFunction& f) {
  detail::check_weights(g, f);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < f(v) - 1) return false;
  }
  return true;
}

// Number of components C of G - S - T with |C| + e_G(C, T) odd.
inline int q_value(const Graph& g, const VertexSet& s, const VertexSet& t) {
  detail::check_members(g, s);
  detail::check_members(g, t);
  if (!s.disjoint_from(t)) throw InputError("q_value needs disjoint S and T");
  std::vector<Vertex> removed(s.begin(), s.end());
  removed.insert(removed.end(), t.begin(), t.end());
  int count = 0;
  for (const VertexSet& c : components(g, VertexSet(std::move(removed)))) {
    count += (static_cast<int>(c.size()) + cross_edges(g, c, t)) % 2 != 0;
  }
  return count;
}

// f(S) - |T| + sum_{x in T} d_{G-S}(x) - q(S,T)
inline long corollary_value(const Graph& g, const DegreeFunction& f,
                            const VertexSet& s, const VertexSet& t) {
  detail::check_weights(g, f);
  long value = f.sum(s) - static_cast<long>(t.size());
  for (Vertex x : t) {
    for (Vertex w : g.neighbors(x)) value += !s.contains(w);
  }
  return value - q_value(g, s, t);
}

namespace detail {

inline long corollary_value_masked(const Graph& g, const DegreeFunction& f,
                                   Mask s, Mask t) {
  long value = weight_sum(f, s) - std::popcount(t);
  const Mask outside_s = g.vertex_mask() & ~s;
  for (Mask rest = t; rest != 0; rest &= rest - 1) {
    value += std::popcount(g.neighbor_mask(std::countr_zero(rest)) & outside_s);
  }
  for (Mask c : masks::components(g, outside_s & ~t)) {
    value -= (std::popcount(c) + masks::cross_edges(g, c, t)) % 2 != 0;
  }
  return value;
}

}  // namespace detail

// First disjoint (S, T) with a negative corollary value, S ascending by
// bitmask and T ascending within it. Whenever G has no H_f-factor such a pair
// exists.
inline std::optional<CorollaryWitness> find_corollary_witness(
    const Graph& g, const DegreeFunction& f, const ScanOptions& options = {}) {
  detail::check_weights(g, f);
  if (g.order() > options.max_pair_vertices || g.order() > 62) {
    throw BudgetExceeded("find_corollary_witness: order " +
                         std::to_string(g.order()) + " exceeds the pair scan cap of " +
                         std::to_string(options.max_pair_vertices));
  }
  const Mask all = g.vertex_mask();
  for (Mask s = 0;; ++s) {
    const Mask rest = all & ~s;
    // T runs over the submasks of rest in increasing order.
    for (Mask t = 0;; t = (t - rest) & rest) {
      const long value = detail::corollary_value_masked(g, f, s, t);
      if (value < 0) {
        return CorollaryWitness{VertexSet::from_mask(s), VertexSet::from_mask(t),
                                value};
      }
      if (t == rest) break;
    }
    if (s == all) break;
  }
  return std::nullopt;
}

// Exact value of omega(G[D]) + sum_{v in B}(mH(v) - d_{G-A}(v)) -
// sum_{v in A} MH(v) for a computed decomposition.
inline long structural_deficiency(const Graph& g, const Prescription& p,
                                  const Decomposition& dec) {
  std::vector<Vertex> not_d;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!dec.d.contains(v)) not_d.push_back(v);
  }
  long value = static_cast<long>(components(g, VertexSet(std::move(not_d))).size());
  for (Vertex v : dec.b) {
    int outside_a = 0;
    for (Vertex w : g.neighbors(v)) outside_a += !dec.a.contains(w);
    value += p.min(v) - outside_a;
  }
  for (Vertex v : dec.a) value -= p.max(v);
  return value;
}

// The three structural facts about an H_f decomposition.
struct HfStructure {
  // No edge joins B to B or to C.
  bool b_isolated_from_bc = true;
  // Every component R of G[D] has |V(R)| + e_G(V(R), B) odd.
  bool d_components_odd_with_b = true;
  // Every component of G[D u B] has odd order.
  bool db_components_odd = true;

  bool all() const {
    return b_isolated_from_bc && d_components_odd_with_b && db_components_odd;
  }
};

inline HfStructure check_hf_structure(const Graph& g, const Decomposition& dec) {
  HfStructure out;
  for (const Edge& e : g.edges()) {
    const bool ub = dec.b.contains(e.u);
    const bool vb = dec.b.contains(e.v);
    const bool ubc = ub || dec.c.contains(e.u);
    const bool vbc = vb || dec.c.contains(e.v);
    if ((ub && vbc) || (vb && ubc)) out.b_isolated_from_bc = false;
  }
  auto complement = [&](auto keep) {
    std::vector<Vertex> removed;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!keep(v)) removed.push_back(v);
    }
    return VertexSet(std::move(removed));
  };
  const VertexSet not_d = complement([&](Vertex v) { return dec.d.contains(v); });
  for (const VertexSet& r : components(g, not_d)) {
    if ((static_cast<int>(r.size()) + cross_edges(g, r, dec.b)) % 2 == 0) {
      out.d_components_odd_with_b = false;
    }
  }
  const VertexSet not_db = complement(
      [&](Vertex v) { return dec.d.contains(v) || dec.b.contains(v); });
  for (const VertexSet& r : components(g, not_db)) {
    if (r.size() % 2 == 0) out.db_components_odd = false;
  }
  return out;
}

// Even order and o(G - S) <= f(S) for all S (including the empty set) should
// force an H_f-factor.
inline VerifyReport verify_main_even(const Graph& g, const DegreeFunction& f,
                                     const SearchBudget& budget = {},
                                     const ScanOptions& options = {}) {
  VerifyReport report;
  if (g.order() % 2 != 0) {
    report.verdict = Verdict::kInapplicable;
    report.reason = "odd order";
    return report;
  }
  const Prescription p = make_hf(g, f);
  report.condition = check_condition(g, f, /*include_empty=*/true, options);
  if (!report.condition->holds) {
    report.verdict = Verdict::kVacuous;
    report.reason = "condition fails";
    return report;
  }
  report.factor = find_factor(g, p, budget);
  switch (report.factor->status) {
    case FactorStatus::kFound:
      report.verdict = Verdict::kConsistent;
      report.reason = "factor found";
      break;
    case FactorStatus::kNone:
      report.verdict = Verdict::kCounterexample;
      report.reason = "condition holds but no H_f-factor exists";
      break;
    case FactorStatus::kUnknown:
      report.verdict = Verdict::kUnknown;
      report.reason = "search budget exhausted";
      break;
  }
  return report;
}

// Connected odd-order graphs with d(v) >= f(v) - 1 and o(G - S) <= f(S) for
// all nonempty S should have an H_f-factor.
inline VerifyReport verify_main_odd(const Graph& g, const DegreeFunction& f,
                                    const SearchBudget& budget = {},
                                    const ScanOptions& options = {}) {
  VerifyReport report;
  if (g.order() % 2 == 0) {
    report.verdict = Verdict::kInapplicable;
    report.reason = "even order";
    return report;
  }
  if (!is_connected(g)) {
    report.verdict = Verdict::kInapplicable;
    report.reason = "disconnected";
    return report;
  }
  const Prescription p = make_hf(g, f);
  report.degree_hypothesis = check_degree_hypothesis(g, f);
  if (!*report.degree_hypothesis) {
    report.verdict = Verdict::kVacuous;
    report.reason = "degree hypothesis fails";
    return report;
  }
  report.condition = check_condition(g, f, /*include_empty=*/false, options);
  if (!report.condition->holds) {
    report.verdict = Verdict::kVacuous;
    report.reason = "condition fails";
    return report;
  }
  report.factor = find_factor(g, p, budget);
  switch (report.factor->status) {
    case FactorStatus::kFound:
      report.verdict = Verdict::kConsistent;
      report.reason = "factor found";
      break;
    case FactorStatus::kNone:
      report.verdict = Verdict::kCounterexample;
      report.reason = "hypotheses hold but no H_f-factor exists";
      break;
    case FactorStatus::kUnknown:
      report.verdict = Verdict::kUnknown;
      report.reason = "search budget exhausted";
      break;
  }
  return report;
}

// (1,h)-odd factor exists iff o(G - S) <= h(S) for every S. Consistent when
// both sides agree.
inline VerifyReport verify_odd_factor_theorem(const Graph& g,
                                              const std::vector<int>& h,
                                              const SearchBudget& budget = {},
                                              const ScanOptions& options = {}) {
  VerifyReport report;
  const Prescription p = make_odd(g, h);
  report.factor = find_factor(g, p, budget);
  if (report.factor->status == FactorStatus::kUnknown) {
    report.verdict = Verdict::kUnknown;
    report.reason = "search budget exhausted";
    return report;
  }
  report.condition =
      check_condition(g, DegreeFunction(h), /*include_empty=*/true, options);
  const bool has_factor = report.factor->status == FactorStatus::kFound;
  if (has_factor == report.condition->holds) {
    report.verdict = Verdict::kConsistent;
    report.reason = has_factor ? "factor exists and condition holds"
                               : "no factor and condition fails";
  } else {
    report.verdict = Verdict::kCounterexample;
    report.reason = has_factor ? "factor exists but condition fails"
                               : "condition holds but no factor exists";
  }
  return report;
}

}  // namespace hfactor

#endif  // HFACTOR_CONDITIONS_HPP_
