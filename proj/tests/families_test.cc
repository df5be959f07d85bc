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

#include "hfactor/families.hpp"

#include <random>

#include "gtest/gtest.h"
#include "hfactor/conditions.hpp"
#include "hfactor/search.hpp"

namespace hfactor {
namespace {

TEST(RemarkOne, SmallestInstance) {
  const Graph g = remark1_graph(2);
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.size(), 10);
  EXPECT_EQ(g.min_degree(), 2);
  EXPECT_EQ(g.degree(0), 4);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(find_factor(g, make_hf(g, DegreeFunction::constant(7, 4))).status,
            FactorStatus::kNone);
}

TEST(RemarkOne, ShapeForThree) {
  const Graph g = remark1_graph(3);
  EXPECT_EQ(g.order(), 21);
  EXPECT_EQ(g.degree(0), 8);
  EXPECT_EQ(g.min_degree(), 4);
  EXPECT_EQ(g.size(), 4 * 10 + 8);
  EXPECT_EQ(odd_components(g, VertexSet{0}), 4);
}

TEST(RemarkOne, RejectsSmallN) {
  EXPECT_THROW(remark1_graph(1), InputError);
  EXPECT_THROW(remark1_graph(-3), InputError);
}

TEST(RemarkOne, ConditionHoldsOnSampledSets) {
  for (int n : {3, 4}) {
    const Graph g = remark1_graph(n);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 3000; ++trial) {
      std::vector<Vertex> s;
      const auto density = 1 + rng() % 8;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (rng() % 16 < density) s.push_back(v);
      }
      if (trial % 3 == 0) s.push_back(0);
      const VertexSet set(s);
      if (set.empty()) continue;
      EXPECT_LE(odd_components(g, set), 2 * n * static_cast<int>(set.size()));
    }
  }
}

TEST(RemarkTwo, Shape) {
  const Graph g = remark2_graph(2, 6);
  EXPECT_EQ(g.order(), 31);
  EXPECT_EQ(g.size(), 6 * 10 + 30);
  EXPECT_EQ(g.min_degree(), 5);
  EXPECT_EQ(g.degree(0), 30);
  EXPECT_EQ(odd_components(g, VertexSet{0}), 6);
}

TEST(RemarkTwo, OnlyTheApexViolatesAmongSingletons) {
  for (auto [n, m] : {std::pair{2, 6}, {2, 8}, {3, 8}}) {
    const Graph g = remark2_graph(n, m);
    for (Vertex v = 0; v < g.order(); ++v) {
      EXPECT_EQ(odd_components(g, VertexSet{v}) > 2 * n, v == 0) << v;
    }
  }
}

TEST(RemarkTwo, RejectsBadParameters) {
  EXPECT_THROW(remark2_graph(2, 4), InputError);
  EXPECT_THROW(remark2_graph(2, 7), InputError);
  EXPECT_THROW(remark2_graph(1, 6), InputError);
}

TEST(RemarkTwo, WitnessIsAFactor) {
  for (auto [n, m] : {std::pair{2, 6}, {2, 8}, {3, 8}, {3, 10}}) {
    const Graph g = remark2_graph(n, m);
    const SpanningSubgraph f = remark2_witness_factor(g, n, m);
    EXPECT_EQ(deviation(f, make_hn(g, n)), 0) << n << "," << m;
    EXPECT_EQ(f.degree(0), 1);
  }
}

TEST(RandomGraph, Extremes) {
  EXPECT_EQ(random_graph(5, 0.0, 1).size(), 0);
  EXPECT_EQ(random_graph(5, 1.0, 1).size(), 10);
  EXPECT_EQ(random_graph(0, 0.5, 1).order(), 0);
  EXPECT_THROW(random_graph(5, 1.5, 1), InputError);
  EXPECT_THROW(random_graph(-1, 0.5, 1), InputError);
}

TEST(RandomGraph, Deterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph a = random_graph(9, 0.4, seed);
    const Graph b = random_graph(9, 0.4, seed);
    EXPECT_EQ(a.edges(), b.edges());
  }
  EXPECT_NE(random_graph(12, 0.5, 1).edges(), random_graph(12, 0.5, 2).edges());
}

TEST(RandomGraph, GeneratorMatchesStandard) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  std::mt19937_64 rng;
  rng.discard(9999);
  EXPECT_EQ(rng(), 9981545732273789042ULL);
}

TEST(RandomGraph, FirstPairFollowsFirstDraw) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    const bool keep = static_cast<double>(rng() >> 11) * 0x1.0p-53 < 0.5;
    EXPECT_EQ(random_graph(2, 0.5, seed).size() == 1, keep);
  }
}

TEST(RandomGraph, DensityTracksP) {
  long total = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) total += random_graph(10, 0.3, seed).size();
  const double mean = static_cast<double>(total) / 200.0 / 45.0;
  EXPECT_NEAR(mean, 0.3, 0.03);
}

TEST(BatchSeed, DistinctAndStable) {
  EXPECT_EQ(batch_seed(7, 3), batch_seed(7, 3));
  EXPECT_NE(batch_seed(7, 3), batch_seed(7, 4));
  EXPECT_NE(batch_seed(7, 3), batch_seed(8, 3));
}

}  // namespace
}  // namespace hfactor
