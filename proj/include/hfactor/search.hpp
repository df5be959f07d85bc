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

#ifndef HFACTOR_SEARCH_HPP_
#define HFACTOR_SEARCH_HPP_

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hfactor/error.hpp"
#include "hfactor/graph.hpp"
#include "hfactor/prescription.hpp"

namespace hfactor {

struct SearchBudget {
  // 2^|E| enumeration up to this many edges.
  int max_edges_exhaustive = 20;
  // Exact branch-and-bound up to this many edges (at most 64).
  int max_edges_bnb = 40;
  // Total flips the local search may spend before answering UNKNOWN.
  long max_local_search_steps = 100000;
  std::uint64_t seed = 0;
  // Threads used by enumeration and branch-and-bound. Results do not depend
  // on this value.
  int workers = 1;

  void validate() const {
    if (max_edges_exhaustive < 1 || max_edges_bnb < 1 ||
        max_local_search_steps < 1 || workers < 1) {
      throw InputError("search budget values must be positive");
    }
    if (max_edges_exhaustive > 40 || max_edges_bnb > 63) {
      throw InputError(
          "max_edges_exhaustive must be <= 40 and max_edges_bnb <= 63");
    }
  }
};

enum class SearchMode { kExhaustive, kBranchAndBound, kLocalSearch };

inline std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::kExhaustive:
      return "exhaustive";
    case SearchMode::kBranchAndBound:
      return "branch-and-bound";
    case SearchMode::kLocalSearch:
      return "local-search";
  }
  return "unknown";
}

struct Optimum {
  long deviation = 0;
  SpanningSubgraph witness;
  SearchMode mode = SearchMode::kExhaustive;
};

enum class FactorStatus { kFound, kNone, kUnknown };

inline std::string to_string(FactorStatus status) {
  switch (status) {
    case FactorStatus::kFound:
      return "FOUND";
    case FactorStatus::kNone:
      return "NONE";
    case FactorStatus::kUnknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

struct FactorResult {
  FactorStatus status = FactorStatus::kUnknown;
  std::optional<SpanningSubgraph> factor;
  SearchMode mode = SearchMode::kExhaustive;
  // Optimum deviation when the search was exact.
  std::optional<long> min_deviation;
};

// The Lovasz partition of V into A, B, C, D together with the degree
// spectra I(v) it was derived from.
struct Decomposition {
  VertexSet a;
  VertexSet b;
  VertexSet c;
  VertexSet d;
  std::vector<std::vector<int>> spectra;
  long min_deviation = 0;
};

namespace detail {

// Order on edge subsets: compare characteristic vectors edge 0 first, with
// "absent" before "present". This is the order in which the branch-and-bound
// visits leaves.
inline bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) == 0;
}

struct Candidate {
  long value = std::numeric_limits<long>::max();
  Mask mask = 0;
  bool found = false;

  void offer(long v, Mask m) {
    if (!found || v < value || (v == value && lex_less(m, mask))) {
      value = v;
      mask = m;
      found = true;
    }
  }
  void merge(const Candidate& other) {
    if (other.found) offer(other.value, other.mask);
  }
};

inline void check_edge_budget(const Graph& g, int limit, const char* what) {
  if (g.size() > limit) {
    throw BudgetExceeded(std::string(what) + ": graph has " +
                         std::to_string(g.size()) + " edges, budget allows " +
                         std::to_string(limit));
  }
}

inline void check_prescription(const Graph& g, const Prescription& p) {
  if (p.size() != g.order()) {
    throw InputError("prescription covers " + std::to_string(p.size()) +
                     " vertices, graph has " + std::to_string(g.order()));
  }
}

// Runs body(i) for i in [0, count) on up to `workers` threads.
template <typename Body>
void parallel_for(int workers, std::size_t count, Body&& body) {
  const auto threads = static_cast<std::size_t>(
      std::max(1, std::min<int>(workers, static_cast<int>(count))));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(std::size_t{0}, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = next++; i < count; i = next++) body(t, i);
    });
  }
  for (auto& th : pool) th.join();
}

// Plain 2^|E| scan over [lo, hi).
inline Candidate scan_range(const Graph& g, const Prescription& p, Mask lo,
                            Mask hi) {
  Candidate best;
  std::vector<int> degrees(static_cast<std::size_t>(g.order()));
  for (Mask m = lo; m < hi; ++m) {
    std::fill(degrees.begin(), degrees.end(), 0);
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const Edge& e = g.edge(std::countr_zero(rest));
      ++degrees[static_cast<std::size_t>(e.u)];
      ++degrees[static_cast<std::size_t>(e.v)];
    }
    best.offer(deviation(degrees, p), m);
  }
  return best;
}

inline Candidate exhaustive_minimum(const Graph& g, const Prescription& p,
                                    int workers) {
  const Mask total = Mask{1} << g.size();
  const Mask chunks = std::min<Mask>(total, Mask{64});
  std::vector<Candidate> parts(static_cast<std::size_t>(chunks));
  parallel_for(workers, static_cast<std::size_t>(chunks),
               [&](std::size_t, std::size_t i) {
                 const Mask lo = total / chunks * i;
                 const Mask hi = i + 1 == chunks ? total : total / chunks * (i + 1);
                 parts[i] = scan_range(g, p, lo, hi);
               });
  Candidate best;
  for (const auto& part : parts) best.merge(part);
  return best;
}

// Depth-first search over edges in index order; "exclude" is tried before
// "include". The bound is the distance from each vertex's reachable degree
// interval [d, d + undecided] to H(v), which no completion can beat.
class EdgeBrancher {
 public:
  EdgeBrancher(const Graph& g, const Prescription& p)
      : g_(g), p_(p),
        degree_(static_cast<std::size_t>(g.order()), 0),
        undecided_(static_cast<std::size_t>(g.order()), 0),
        cost_(static_cast<std::size_t>(g.order()), 0) {
    for (Vertex v = 0; v < g.order(); ++v) {
      undecided_[idx(v)] = g.degree(v);
      cost_[idx(v)] = p.distance_to_range(v, 0, g.degree(v));
      bound_ += cost_[idx(v)];
    }
  }

  long bound() const { return bound_; }
  const std::vector<int>& degrees() const { return degree_; }

  void decide(int e, bool take) {
    const Edge& edge = g_.edge(e);
    step(edge.u, take, -1);
    step(edge.v, take, -1);
  }
  void undo(int e, bool take) {
    const Edge& edge = g_.edge(e);
    step(edge.u, take, +1);
    step(edge.v, take, +1);
  }

  // Lexicographically first minimiser in the subtree below `next`. Subtrees
  // are cut when the bound reaches the local best, or exceeds `shared`.
  void minimize(int next, Mask chosen, Candidate& best,
                std::atomic<long>* shared) {
    if (best.found && bound_ >= best.value) return;
    if (shared != nullptr && bound_ > shared->load(std::memory_order_relaxed)) {
      return;
    }
    if (next == g_.size()) {
      best.offer(bound_, chosen);
      if (shared != nullptr) {
        long cur = shared->load(std::memory_order_relaxed);
        while (bound_ < cur &&
               !shared->compare_exchange_weak(cur, bound_,
                                              std::memory_order_relaxed)) {
        }
      }
      return;
    }
    decide(next, false);
    minimize(next + 1, chosen, best, shared);
    undo(next, false);
    decide(next, true);
    minimize(next + 1, chosen | (Mask{1} << next), best, shared);
    undo(next, true);
  }

  // Visits every leaf below `next` whose deviation equals target, in
  // lexicographic order.
  template <typename Visit>
  void enumerate(int next, Mask chosen, long target, Visit& visit) {
    if (bound_ > target) return;
    if (next == g_.size()) {
      visit(chosen, degree_);
      return;
    }
    decide(next, false);
    enumerate(next + 1, chosen, target, visit);
    undo(next, false);
    decide(next, true);
    enumerate(next + 1, chosen | (Mask{1} << next), target, visit);
    undo(next, true);
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  void step(Vertex v, bool take, int sign) {
    undecided_[idx(v)] += sign;
    if (take) degree_[idx(v)] -= sign;
    bound_ -= cost_[idx(v)];
    cost_[idx(v)] = p_.distance_to_range(v, degree_[idx(v)],
                                         degree_[idx(v)] + undecided_[idx(v)]);
    bound_ += cost_[idx(v)];
  }

  const Graph& g_;
  const Prescription& p_;
  std::vector<int> degree_;
  std::vector<int> undecided_;
  std::vector<int> cost_;
  long bound_ = 0;
};

// Number of leading edges fixed per parallel task.
inline int split_depth(const Graph& g, int workers) {
  if (workers <= 1) return 0;
  return std::min(g.size(),
                  static_cast<int>(std::bit_width(static_cast<unsigned>(workers))) + 3);
}

// Prefix i assigns edge j (j < depth) the bit (depth-1-j) of i, so prefixes
// ascending in i are ascending in lexicographic order.
inline Mask prefix_mask(std::size_t i, int depth) {
  Mask m = 0;
  for (int j = 0; j < depth; ++j) {
    if ((i >> (depth - 1 - j)) & 1U) m |= Mask{1} << j;
  }
  return m;
}

inline Candidate branch_and_bound_minimum(const Graph& g, const Prescription& p,
                                          int workers) {
  const int depth = split_depth(g, workers);
  if (depth == 0) {
    EdgeBrancher brancher(g, p);
    Candidate best;
    brancher.minimize(0, 0, best, nullptr);
    return best;
  }
  const std::size_t tasks = std::size_t{1} << depth;
  std::atomic<long> shared{std::numeric_limits<long>::max()};
  std::vector<Candidate> parts(tasks);
  parallel_for(workers, tasks, [&](std::size_t, std::size_t i) {
    EdgeBrancher brancher(g, p);
    const Mask prefix = prefix_mask(i, depth);
    for (int j = 0; j < depth; ++j) brancher.decide(j, (prefix >> j) & 1U);
    brancher.minimize(depth, prefix, parts[i], &shared);
  });
  Candidate best;
  for (const auto& part : parts) best.merge(part);
  return best;
}

// Calls visit(mask, degrees) for every optimal subgraph; with more than one
// worker visit runs concurrently, once per worker slot given as first arg.
template <typename Visit>
void enumerate_optimal(const Graph& g, const Prescription& p, long target,
                       int workers, Visit&& visit) {
  const int depth = split_depth(g, workers);
  const std::size_t tasks = std::size_t{1} << depth;
  parallel_for(workers, tasks, [&](std::size_t slot, std::size_t i) {
    EdgeBrancher brancher(g, p);
    const Mask prefix = prefix_mask(i, depth);
    for (int j = 0; j < depth; ++j) brancher.decide(j, (prefix >> j) & 1U);
    auto leaf = [&](Mask m, const std::vector<int>& degrees) {
      visit(slot, m, degrees);
    };
    brancher.enumerate(depth, prefix, target, leaf);
  });
}

// Flip-based local search for deviation zero. Returns the factor's edge flags
// or nothing once the step budget is spent.
inline std::optional<std::vector<char>> local_search_factor(
    const Graph& g, const Prescription& p, const SearchBudget& budget) {
  std::mt19937_64 rng(budget.seed);
  const auto n = static_cast<std::size_t>(g.order());
  const auto m = static_cast<std::size_t>(g.size());
  std::vector<char> in(m, 0);
  std::vector<int> degree(n, 0);
  long total = 0;
  auto cost = [&](Vertex v, int d) { return static_cast<long>(p.distance(v, d)); };
  auto restart = [&] {
    std::fill(degree.begin(), degree.end(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      in[e] = static_cast<char>(rng() & 1U);
      if (in[e]) {
        ++degree[static_cast<std::size_t>(g.edge(static_cast<int>(e)).u)];
        ++degree[static_cast<std::size_t>(g.edge(static_cast<int>(e)).v)];
      }
    }
    total = deviation(degree, p);
  };
  auto delta = [&](int e) {
    const Edge& edge = g.edge(e);
    const int s = in[static_cast<std::size_t>(e)] ? -1 : 1;
    const int du = degree[static_cast<std::size_t>(edge.u)];
    const int dv = degree[static_cast<std::size_t>(edge.v)];
    return cost(edge.u, du + s) - cost(edge.u, du) + cost(edge.v, dv + s) -
           cost(edge.v, dv);
  };
  auto flip = [&](int e) {
    const Edge& edge = g.edge(e);
    total += delta(e);
    const int s = in[static_cast<std::size_t>(e)] ? -1 : 1;
    in[static_cast<std::size_t>(e)] ^= 1;
    degree[static_cast<std::size_t>(edge.u)] += s;
    degree[static_cast<std::size_t>(edge.v)] += s;
  };

  if (m == 0) {
    if (deviation(degree, p) == 0) return in;
    return std::nullopt;
  }
  restart();
  long best_seen = total;
  long since_improvement = 0;
  const long patience = 50 * static_cast<long>(m) + 100;
  std::vector<Vertex> bad;
  std::vector<int> ties;
  for (long step = 0; step < budget.max_local_search_steps; ++step) {
    if (total == 0) return in;
    bad.clear();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (cost(v, degree[static_cast<std::size_t>(v)]) > 0) bad.push_back(v);
    }
    const Vertex v = bad[rng() % bad.size()];
    const auto& incident = g.incident_edges(v);
    if (incident.empty() || rng() % 10 == 0) {
      flip(static_cast<int>(rng() % m));
    } else {
      long best_delta = std::numeric_limits<long>::max();
      ties.clear();
      for (int e : incident) {
        const long d = delta(e);
        if (d < best_delta) {
          best_delta = d;
          ties.assign(1, e);
        } else if (d == best_delta) {
          ties.push_back(e);
        }
      }
      flip(ties[rng() % ties.size()]);
    }
    if (total < best_seen) {
      best_seen = total;
      since_improvement = 0;
    } else if (++since_improvement > patience) {
      restart();
      best_seen = total;
      since_improvement = 0;
    }
  }
  if (total == 0) return in;
  return std::nullopt;
}

}  // namespace detail

// The optimum deviation and the lexicographically first optimal subgraph.
// Exhaustive up to max_edges_exhaustive edges, branch-and-bound up to
// max_edges_bnb; larger graphs throw BudgetExceeded.
inline Optimum min_deviation(const Graph& g, const Prescription& p,
                             const SearchBudget& budget = {}) {
  budget.validate();
  detail::check_prescription(g, p);
  detail::check_edge_budget(g, std::max(budget.max_edges_exhaustive,
                                        budget.max_edges_bnb),
                            "min_deviation");
  Optimum result;
  detail::Candidate best;
  if (g.size() <= budget.max_edges_exhaustive) {
    result.mode = SearchMode::kExhaustive;
    best = detail::exhaustive_minimum(g, p, budget.workers);
  } else {
    result.mode = SearchMode::kBranchAndBound;
    best = detail::branch_and_bound_minimum(g, p, budget.workers);
  }
  result.deviation = best.value;
  result.witness = SpanningSubgraph::from_mask(g, best.mask);
  return result;
}

// Exact within the edge budgets (NONE is then a proof of absence). Beyond
// them a seeded local search runs, and failing to find a factor is UNKNOWN.
inline FactorResult find_factor(const Graph& g, const Prescription& p,
                                const SearchBudget& budget = {}) {
  budget.validate();
  detail::check_prescription(g, p);
  FactorResult result;
  if (g.size() <= std::max(budget.max_edges_exhaustive, budget.max_edges_bnb)) {
    Optimum opt = min_deviation(g, p, budget);
    result.mode = opt.mode;
    result.min_deviation = opt.deviation;
    if (opt.deviation == 0) {
      result.status = FactorStatus::kFound;
      result.factor = std::move(opt.witness);
    } else {
      result.status = FactorStatus::kNone;
    }
    return result;
  }
  result.mode = SearchMode::kLocalSearch;
  if (auto flags = detail::local_search_factor(g, p, budget)) {
    std::vector<int> indices;
    for (std::size_t e = 0; e < flags->size(); ++e) {
      if ((*flags)[e]) indices.push_back(static_cast<int>(e));
    }
    result.status = FactorStatus::kFound;
    result.factor = SpanningSubgraph(g, std::move(indices));
  } else {
    result.status = FactorStatus::kUnknown;
  }
  return result;
}

// Calls visit(edge_mask, degrees) for every optimal spanning subgraph in
// lexicographic order. Requires |E| <= max_edges_exhaustive.
template <typename Visit>
long for_each_optimal(const Graph& g, const Prescription& p,
                      const SearchBudget& budget, Visit&& visit) {
  budget.validate();
  detail::check_prescription(g, p);
  detail::check_edge_budget(g, budget.max_edges_exhaustive, "for_each_optimal");
  const long target = detail::branch_and_bound_minimum(g, p, 1).value;
  detail::EdgeBrancher brancher(g, p);
  brancher.enumerate(0, 0, target, visit);
  return target;
}

// I(v): every degree v takes over all optimal subgraphs, sorted ascending.
inline std::vector<std::vector<int>> degree_spectra(
    const Graph& g, const Prescription& p, const SearchBudget& budget = {},
    long* optimum = nullptr) {
  budget.validate();
  detail::check_prescription(g, p);
  detail::check_edge_budget(g, budget.max_edges_exhaustive, "degree_spectra");
  const long target =
      detail::branch_and_bound_minimum(g, p, budget.workers).value;
  if (optimum != nullptr) *optimum = target;
  const auto n = static_cast<std::size_t>(g.order());
  const auto slots = static_cast<std::size_t>(budget.workers);
  // Degrees are at most |E| <= 40, so one mask per vertex records them.
  std::vector<std::vector<Mask>> seen(slots, std::vector<Mask>(n, 0));
  detail::enumerate_optimal(
      g, p, target, budget.workers,
      [&](std::size_t slot, Mask, const std::vector<int>& degrees) {
        auto& mine = seen[slot];
        for (std::size_t v = 0; v < n; ++v) mine[v] |= Mask{1} << degrees[v];
      });
  std::vector<std::vector<int>> spectra(n);
  for (std::size_t v = 0; v < n; ++v) {
    Mask all = 0;
    for (const auto& mine : seen) all |= mine[v];
    for (; all != 0; all &= all - 1) spectra[v].push_back(std::countr_zero(all));
  }
  return spectra;
}

// Classifies each vertex by comparing I(v) with H(v). Non-allowed
// prescriptions are refused unless allow_non_allowed is set.
inline Decomposition decompose(const Graph& g, const Prescription& p,
                               const SearchBudget& budget = {},
                               bool allow_non_allowed = false) {
  if (!allow_non_allowed && !p.allowed()) {
    throw InputError(
        "decompose needs an allowed prescription (gaps of at most one integer)");
  }
  Decomposition out;
  out.spectra = degree_spectra(g, p, budget, &out.min_deviation);
  std::vector<Vertex> a, b, c, d;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& spectrum = out.spectra[static_cast<std::size_t>(v)];
    const bool inside = std::all_of(spectrum.begin(), spectrum.end(),
                                    [&](int x) { return p.contains(v, x); });
    if (inside) {
      c.push_back(v);
    } else if (spectrum.front() >= p.max(v)) {
      a.push_back(v);
    } else if (spectrum.back() <= p.min(v)) {
      b.push_back(v);
    } else {
      d.push_back(v);
    }
  }
  out.a = VertexSet(std::move(a));
  out.b = VertexSet(std::move(b));
  out.c = VertexSet(std::move(c));
  out.d = VertexSet(std::move(d));
  return out;
}

// Connected with D = V.
inline bool is_critical(const Graph& g, const Prescription& p,
                        const SearchBudget& budget = {},
                        bool allow_non_allowed = false) {
  if (!is_connected(g)) return false;
  const Decomposition dec = decompose(g, p, budget, allow_non_allowed);
  return static_cast<int>(dec.d.size()) == g.order();
}

// MH(v) - 1 in H(v) and d_G(v) >= MH(v) - 1 for every v; graphs meeting this
// are never critical.
inline bool check_noncritical_hypothesis(const Graph& g, const Prescription& p) {
  detail::check_prescription(g, p);
  for (Vertex v = 0; v < g.order(); ++v) {
    const int top = p.max(v);
    if (!p.contains(v, top - 1) || g.degree(v) < top - 1) return false;
  }
  return true;
}

}  // namespace hfactor

#endif  // HFACTOR_SEARCH_HPP_
