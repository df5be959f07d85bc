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

#ifndef HFACTOR_GRAPH_HPP_
#define HFACTOR_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hfactor/error.hpp"

namespace hfactor {

using Vertex = int;

// Bitmask over at most 64 vertices or edges. Bit i stands for vertex/edge i.
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

// An unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A set of vertices kept sorted ascending and free of duplicates.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }

  static VertexSet from_mask(Mask mask) {
    VertexSet s;
    while (mask != 0) {
      s.members_.push_back(std::countr_zero(mask));
      mask &= mask - 1;
    }
    return s;
  }

  // All of [0, n).
  static VertexSet range(int n) {
    VertexSet s;
    s.members_.resize(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) s.members_[static_cast<std::size_t>(i)] = i;
    return s;
  }

  Mask mask() const {
    Mask m = 0;
    for (Vertex v : members_) {
      if (v < 0 || v >= kMaskBits) {
        throw InputError("vertex " + std::to_string(v) +
                         " does not fit in a 64-bit mask");
      }
      m |= Mask{1} << v;
    }
    return m;
  }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool disjoint_from(const VertexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
      if (*a == *b) return false;
      if (*a < *b) {
        ++a;
      } else {
        ++b;
      }
    }
    return true;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

class Graph;

// G[S] relabelled to 0..|S|-1; to_host[i] is the host label of vertex i.
struct InducedSubgraph;

// Simple undirected graph on vertices 0..n-1. Immutable once built; edge
// indices follow the order the edges were supplied in.
class Graph {
 public:
  Graph() = default;

  // Rejects self-loops, duplicate edges and endpoints outside [0, n).
  static Graph build(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    g.incident_.resize(static_cast<std::size_t>(n));
    g.edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw InputError("edge (" + std::to_string(a) + "," +
                         std::to_string(b) + ") has an endpoint outside [0, " +
                         std::to_string(n) + ")");
      }
      if (a == b) {
        throw InputError("self-loop at vertex " + std::to_string(a));
      }
      if (g.has_edge(a, b)) {
        throw InputError("duplicate edge (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
      }
      const int index = static_cast<int>(g.edges_.size());
      g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
      g.adjacency_[static_cast<std::size_t>(a)].push_back(b);
      g.adjacency_[static_cast<std::size_t>(b)].push_back(a);
      g.incident_[static_cast<std::size_t>(a)].push_back(index);
      g.incident_[static_cast<std::size_t>(b)].push_back(index);
    }
    if (n <= kMaskBits) {
      g.neighbor_masks_.assign(static_cast<std::size_t>(n), 0);
      for (const Edge& e : g.edges_) {
        g.neighbor_masks_[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        g.neighbor_masks_[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
      }
    }
    return g;
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
    return build(n, pairs);
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const {
    return edges_[static_cast<std::size_t>(index)];
  }

  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
  }
  const std::vector<Vertex>& neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  // Indices of the edges incident to v, ascending.
  const std::vector<int>& incident_edges(Vertex v) const {
    return incident_[static_cast<std::size_t>(v)];
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    const auto& na = adjacency_[static_cast<std::size_t>(a)];
    return std::find(na.begin(), na.end(), b) != na.end();
  }

  int min_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
    return best;
  }
  int max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  // Only available for graphs with at most 64 vertices.
  bool fits_mask() const { return n_ <= kMaskBits; }
  Mask neighbor_mask(Vertex v) const {
    return neighbor_masks_[static_cast<std::size_t>(v)];
  }
  Mask vertex_mask() const {
    return n_ >= kMaskBits ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<int>> incident_;
  std::vector<Mask> neighbor_masks_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;
};

namespace detail {

inline void check_members(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) {
      throw InputError("vertex " + std::to_string(v) + " is not in the graph");
    }
  }
}

}  // namespace detail

inline Graph complete(int k) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) pairs.emplace_back(u, v);
  }
  return Graph::build(k, pairs);
}

inline Graph empty_graph(int k) { return Graph::from_edges(k, {}); }

// Disjoint union; second graph's labels shift by first.order().
inline Graph disjoint_union(const Graph& first, const Graph& second) {
  std::vector<Edge> edges = first.edges();
  const int shift = first.order();
  for (const Edge& e : second.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(first.order() + second.order(), edges);
}

// G1 + G2: disjoint union plus every edge between the two parts.
inline Graph join(const Graph& first, const Graph& second) {
  std::vector<Edge> edges = first.edges();
  const int shift = first.order();
  for (const Edge& e : second.edges()) edges.push_back({e.u + shift, e.v + shift});
  for (Vertex u = 0; u < first.order(); ++u) {
    for (Vertex v = 0; v < second.order(); ++v) edges.push_back({u, v + shift});
  }
  return Graph::from_edges(first.order() + second.order(), edges);
}

// Connected components of G - removed, each sorted, ordered by least member.
inline std::vector<VertexSet> components(const Graph& g,
                                         const VertexSet& removed = {}) {
  detail::check_members(g, removed);
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> seen(n, 0);
  for (Vertex v : removed) seen[static_cast<std::size_t>(v)] = 1;
  std::vector<VertexSet> result;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<Vertex> members;
    seen[static_cast<std::size_t>(root)] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    result.emplace_back(std::move(members));
  }
  return result;
}

inline int odd_components(const Graph& g, const VertexSet& removed = {}) {
  int odd = 0;
  for (const VertexSet& c : components(g, removed)) odd += c.size() % 2 == 1;
  return odd;
}

inline bool is_connected(const Graph& g) {
  return g.order() > 0 && components(g).size() == 1;
}

// e_G(S,T). S and T must be disjoint.
inline int cross_edges(const Graph& g, const VertexSet& s, const VertexSet& t) {
  detail::check_members(g, s);
  detail::check_members(g, t);
  if (!s.disjoint_from(t)) throw InputError("cross_edges needs disjoint sets");
  int count = 0;
  for (const Edge& e : g.edges()) {
    if ((s.contains(e.u) && t.contains(e.v)) ||
        (s.contains(e.v) && t.contains(e.u))) {
      ++count;
    }
  }
  return count;
}

inline InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  detail::check_members(g, s);
  std::vector<Vertex> to_local(static_cast<std::size_t>(g.order()), -1);
  InducedSubgraph result;
  result.to_host = s.members();
  for (std::size_t i = 0; i < result.to_host.size(); ++i) {
    to_local[static_cast<std::size_t>(result.to_host[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = to_local[static_cast<std::size_t>(e.u)];
    const Vertex b = to_local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  result.graph = Graph::from_edges(static_cast<int>(s.size()), edges);
  return result;
}

// Mask-based counterparts for graphs with at most 64 vertices, used by the
// subset scans.
namespace masks {

// Number of odd components of G[alive].
inline int odd_components(const Graph& g, Mask alive) {
  int odd = 0;
  while (alive != 0) {
    Mask frontier = alive & (~alive + 1);
    Mask comp = frontier;
    while (frontier != 0) {
      const Vertex v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = g.neighbor_mask(v) & alive & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    alive &= ~comp;
    odd += std::popcount(comp) & 1;
  }
  return odd;
}

// Components of G[alive] as masks, ordered by least member.
inline std::vector<Mask> components(const Graph& g, Mask alive) {
  std::vector<Mask> result;
  while (alive != 0) {
    Mask frontier = alive & (~alive + 1);
    Mask comp = frontier;
    while (frontier != 0) {
      const Vertex v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = g.neighbor_mask(v) & alive & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    alive &= ~comp;
    result.push_back(comp);
  }
  return result;
}

inline int cross_edges(const Graph& g, Mask s, Mask t) {
  int count = 0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    count += std::popcount(g.neighbor_mask(std::countr_zero(rest)) & t);
  }
  return count;
}

}  // namespace masks

}  // namespace hfactor

#endif  // HFACTOR_GRAPH_HPP_
