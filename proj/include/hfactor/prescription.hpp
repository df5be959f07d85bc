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

#ifndef HFACTOR_PRESCRIPTION_HPP_
#define HFACTOR_PRESCRIPTION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <iterator>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hfactor/error.hpp"
#include "hfactor/graph.hpp"

namespace hfactor {

// Per-vertex positive integer f(v). Used both as the weight in o(G-S) <= f(S)
// and, when every value is even and at least 4, to build H_f.
class DegreeFunction {
 public:
  DegreeFunction() = default;
  explicit DegreeFunction(std::vector<int> values) : values_(std::move(values)) {
    for (int x : values_) {
      if (x < 1) throw InputError("degree function values must be positive");
    }
  }
  static DegreeFunction constant(int order, int value) {
    return DegreeFunction(std::vector<int>(static_cast<std::size_t>(std::max(order, 0)), value));
  }

  int operator()(Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }

  // f(S)
  long sum(const VertexSet& s) const {
    long total = 0;
    for (Vertex v : s) total += values_[static_cast<std::size_t>(v)];
    return total;
  }

 private:
  std::vector<int> values_;
};

// Allowed degree sets H(v), one per vertex, each sorted ascending.
class Prescription {
 public:
  Prescription() = default;

  // Members must be nonnegative unless allow_negative is set (shifted
  // prescriptions H(x) - e_G(x,T) can go below zero).
  explicit Prescription(std::vector<std::vector<int>> sets,
                        bool allow_negative = false)
      : sets_(std::move(sets)) {
    for (auto& s : sets_) {
      if (s.empty()) throw InputError("every H(v) must be nonempty");
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (!allow_negative && s.front() < 0) {
        throw InputError("H(v) members must be nonnegative");
      }
    }
  }

  static Prescription constant(int order, std::vector<int> set) {
    return Prescription(std::vector<std::vector<int>>(
        static_cast<std::size_t>(std::max(order, 0)), std::move(set)));
  }

  int size() const { return static_cast<int>(sets_.size()); }
  const std::vector<int>& at(Vertex v) const {
    return sets_[static_cast<std::size_t>(v)];
  }
  const std::vector<std::vector<int>>& sets() const { return sets_; }

  // mH(v) and MH(v).
  int min(Vertex v) const { return at(v).front(); }
  int max(Vertex v) const { return at(v).back(); }
  long min_sum(const VertexSet& s) const {
    long total = 0;
    for (Vertex v : s) total += min(v);
    return total;
  }
  long max_sum(const VertexSet& s) const {
    long total = 0;
    for (Vertex v : s) total += max(v);
    return total;
  }

  bool contains(Vertex v, int degree) const {
    const auto& s = at(v);
    return std::binary_search(s.begin(), s.end(), degree);
  }

  // min{|degree - h| : h in H(v)}
  int distance(Vertex v, int degree) const {
    return distance_to_range(v, degree, degree);
  }

  // Distance from the interval [lo, hi] to H(v): zero if they meet.
  int distance_to_range(Vertex v, int lo, int hi) const {
    const auto& s = at(v);
    auto it = std::lower_bound(s.begin(), s.end(), lo);
    int best = std::numeric_limits<int>::max();
    if (it != s.end()) {
      if (*it <= hi) return 0;
      best = *it - hi;
    }
    if (it != s.begin()) best = std::min(best, lo - *std::prev(it));
    return best;
  }

  // Every H(v) has gaps of at most one integer.
  bool allowed() const {
    for (const auto& s : sets_) {
      for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] - s[i - 1] > 2) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Prescription&, const Prescription&) = default;

 private:
  std::vector<std::vector<int>> sets_;
};

// Edge subset of a host graph with its degree vector. Holds a pointer to the
// host, which must outlive it.
class SpanningSubgraph {
 public:
  SpanningSubgraph() = default;

  SpanningSubgraph(const Graph& host, std::vector<int> edge_indices)
      : host_(&host), edges_(std::move(edge_indices)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    degrees_.assign(static_cast<std::size_t>(host.order()), 0);
    for (int index : edges_) {
      if (index < 0 || index >= host.size()) {
        throw InputError("edge index " + std::to_string(index) +
                         " is not an edge of the host graph");
      }
      const Edge& e = host.edge(index);
      ++degrees_[static_cast<std::size_t>(e.u)];
      ++degrees_[static_cast<std::size_t>(e.v)];
    }
  }

  static SpanningSubgraph from_mask(const Graph& host, Mask edge_mask) {
    std::vector<int> indices;
    for (; edge_mask != 0; edge_mask &= edge_mask - 1) {
      indices.push_back(std::countr_zero(edge_mask));
    }
    return SpanningSubgraph(host, std::move(indices));
  }

  // Looks up each pair in the host; throws if a pair is not a host edge.
  static SpanningSubgraph from_pairs(
      const Graph& host, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<int> indices;
    for (auto [a, b] : pairs) {
      const Edge key{std::min(a, b), std::max(a, b)};
      const auto& edges = host.edges();
      auto it = std::find(edges.begin(), edges.end(), key);
      if (it == edges.end()) {
        throw InputError("(" + std::to_string(a) + "," + std::to_string(b) +
                         ") is not an edge of the host graph");
      }
      indices.push_back(static_cast<int>(it - edges.begin()));
    }
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("subgraph lists an edge twice");
    }
    return SpanningSubgraph(host, std::move(indices));
  }

  const Graph& host() const { return *host_; }
  const std::vector<int>& edge_indices() const { return edges_; }
  int degree(Vertex v) const { return degrees_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degrees() const { return degrees_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool contains(int edge_index) const {
    return std::binary_search(edges_.begin(), edges_.end(), edge_index);
  }

  std::vector<Edge> edge_list() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (int index : edges_) out.push_back(host_->edge(index));
    return out;
  }

  Mask mask() const {
    Mask m = 0;
    for (int index : edges_) {
      if (index >= kMaskBits) throw InputError("edge index does not fit a mask");
      m |= Mask{1} << index;
    }
    return m;
  }

 private:
  const Graph* host_ = nullptr;
  std::vector<int> edges_;
  std::vector<int> degrees_;
};

// H_f(v) = {1, 3, ..., f(v)-1, f(v)} for even f(v) >= 4.
inline Prescription make_hf(const Graph& g, const DegreeFunction& f) {
  if (f.size() != g.order()) {
    throw InputError("degree function has " + std::to_string(f.size()) +
                     " values for a graph of order " + std::to_string(g.order()));
  }
  std::vector<std::vector<int>> sets;
  sets.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    const int fv = f(v);
    if (fv < 4 || fv % 2 != 0) {
      throw InputError("H_f needs f(v) even and >= 4; f(" + std::to_string(v) +
                       ") = " + std::to_string(fv));
    }
    std::vector<int> s;
    for (int d = 1; d < fv; d += 2) s.push_back(d);
    s.push_back(fv);
    sets.push_back(std::move(s));
  }
  return Prescription(std::move(sets));
}

// H_n = {1, 3, ..., 2n-1, 2n} on every vertex.
inline Prescription make_hn(const Graph& g, int n) {
  if (n < 2) throw InputError("H_n needs n >= 2");
  return make_hf(g, DegreeFunction::constant(g.order(), 2 * n));
}

// (1,h)-odd prescription {1, 3, ..., h(v)} for odd h(v) >= 1.
inline Prescription make_odd(const Graph& g, const std::vector<int>& h) {
  if (static_cast<int>(h.size()) != g.order()) {
    throw InputError("odd prescription needs one value per vertex");
  }
  std::vector<std::vector<int>> sets;
  sets.reserve(h.size());
  for (int hv : h) {
    if (hv < 1 || hv % 2 == 0) {
      throw InputError("(1,h)-odd prescription needs odd h(v) >= 1, got " +
                       std::to_string(hv));
    }
    std::vector<int> s;
    for (int d = 1; d <= hv; d += 2) s.push_back(d);
    sets.push_back(std::move(s));
  }
  return Prescription(std::move(sets));
}

// H_{C,T}(x) = H(x) - e_G(x,T), indexed by the position of x in c (that is,
// by the labels of induced(g, c)).
inline Prescription shifted(const Graph& g, const Prescription& p,
                            const VertexSet& c, const VertexSet& t) {
  detail::check_members(g, c);
  detail::check_members(g, t);
  if (!c.disjoint_from(t)) throw InputError("shifted needs disjoint C and T");
  std::vector<std::vector<int>> sets;
  sets.reserve(c.size());
  for (Vertex x : c) {
    int into_t = 0;
    for (Vertex w : g.neighbors(x)) into_t += t.contains(w);
    std::vector<int> s = p.at(x);
    for (int& h : s) h -= into_t;
    sets.push_back(std::move(s));
  }
  return Prescription(std::move(sets), /*allow_negative=*/true);
}

// Sum over vertices of the distance from d_F(v) to H(v).
inline long deviation(const std::vector<int>& degrees, const Prescription& p) {
  if (static_cast<int>(degrees.size()) != p.size()) {
    throw InputError("prescription and subgraph disagree on the vertex count");
  }
  long total = 0;
  for (Vertex v = 0; v < p.size(); ++v) {
    total += p.distance(v, degrees[static_cast<std::size_t>(v)]);
  }
  return total;
}

inline long deviation(const SpanningSubgraph& f, const Prescription& p) {
  return deviation(f.degrees(), p);
}

}  // namespace hfactor

#endif  // HFACTOR_PRESCRIPTION_HPP_
