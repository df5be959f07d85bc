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

#ifndef HFACTOR_FAMILIES_HPP_
#define HFACTOR_FAMILIES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hfactor/error.hpp"
#include "hfactor/graph.hpp"
#include "hfactor/prescription.hpp"

namespace hfactor {

namespace detail {

inline void add_clique(std::vector<Edge>& edges, Vertex first, int size) {
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) edges.push_back({first + i, first + j});
  }
}

inline Graph sorted_build(int n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

}  // namespace detail

// Apex 0 plus 2n-2 disjoint copies of K_{2n-1}; the apex is joined to the two
// lowest labels of each copy. Order (2n-2)(2n-1)+1, minimum degree 2n-2.
inline Graph remark1_graph(int n) {
  if (n < 2) throw InputError("remark1 needs n >= 2");
  const int copies = 2 * n - 2;
  const int clique = 2 * n - 1;
  std::vector<Edge> edges;
  for (int i = 0; i < copies; ++i) {
    const Vertex first = 1 + i * clique;
    detail::add_clique(edges, first, clique);
    edges.push_back({0, first});
    edges.push_back({0, first + 1});
  }
  return detail::sorted_build(1 + copies * clique, std::move(edges));
}

inline void check_remark2(int n, int m) {
  if (n < 2) throw InputError("remark2 needs n >= 2");
  if (m % 2 != 0 || m < 2 * n + 2) {
    throw InputError("remark2 needs m even and m >= 2n+2");
  }
}

// K_1 + m K_{2n+1}, apex labelled 0, copy i occupying 1 + i(2n+1) onwards.
inline Graph remark2_graph(int n, int m) {
  check_remark2(n, m);
  const int clique = 2 * n + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const Vertex first = 1 + i * clique;
    detail::add_clique(edges, first, clique);
    for (int j = 0; j < clique; ++j) edges.push_back({0, first + j});
  }
  return detail::sorted_build(1 + m * clique, std::move(edges));
}

// An explicit H_n-factor of remark2_graph(n, m): the apex takes one edge to
// the lowest vertex of the first copy, the other 2n vertices of that copy are
// matched in consecutive pairs, and every other copy carries the spanning
// star at its lowest label (centre degree 2n). `host` must be
// remark2_graph(n, m).
inline SpanningSubgraph remark2_witness_factor(const Graph& host, int n, int m) {
  check_remark2(n, m);
  const int clique = 2 * n + 1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.emplace_back(0, 1);
  for (int j = 1; j < clique; j += 2) pairs.emplace_back(1 + j, 2 + j);
  for (int i = 1; i < m; ++i) {
    const Vertex centre = 1 + i * clique;
    for (int j = 1; j < clique; ++j) pairs.emplace_back(centre, centre + j);
  }
  return SpanningSubgraph::from_pairs(host, pairs);
}

// G(nv, p) driven by std::mt19937_64 seeded with `seed`. Pairs (u, v), u < v,
// are visited in lexicographic order; each consumes one 64-bit draw x and is
// kept iff (x >> 11) * 2^-53 < p. The standard pins mt19937_64's output
// sequence, so instances are portable.
inline Graph random_graph(int nv, double p, std::uint64_t seed) {
  if (nv < 0) throw InputError("random graph needs nv >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < nv; ++u) {
    for (Vertex v = u + 1; v < nv; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(nv, edges);
}

// Derives the seed of instance `index` in a batch started from `seed`
// (splitmix64 finaliser).
inline std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hfactor

#endif  // HFACTOR_FAMILIES_HPP_
