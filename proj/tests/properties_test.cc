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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "hfactor/hfactor.hpp"
#include "hfactor/io.hpp"
#include "lovasz_checks.hpp"
#include "oracle.hpp"

namespace hfactor {
namespace {

std::string join_messages(const checks::Failures& f) {
  std::string out;
  for (const auto& m : f.messages) out += m + "\n";
  return out;
}

// A random set in [0, 5] whose gaps are at most 2.
std::vector<int> random_allowed_set(std::mt19937_64& rng) {
  std::vector<int> set{static_cast<int>(rng() % 3)};
  while (true) {
    const int next = set.back() + 1 + static_cast<int>(rng() % 2);
    if (next > 5 || rng() % 3 == 0) break;
    set.push_back(next);
  }
  return set;
}

SearchBudget enumeration_budget() {
  SearchBudget b;
  b.max_edges_exhaustive = 28;
  return b;
}

TEST(StructureProperties, HfPrescriptions) {
  const SearchBudget budget = enumeration_budget();
  for (int i = 0; i < 60; ++i) {
    const int nv = 3 + i % 6;
    const Graph g = random_graph(nv, 0.3 + 0.2 * (i % 3), batch_seed(11, static_cast<std::uint64_t>(i)));
    for (int f : {4, 6}) {
      const DegreeFunction fn = DegreeFunction::constant(nv, f);
      Decomposition dec;
      const checks::Failures l = checks::lovasz_properties(g, make_hf(g, fn), budget, &dec);
      EXPECT_TRUE(l.ok()) << join_messages(l);
      const checks::Failures h = checks::hf_properties(g, fn, budget, dec);
      EXPECT_TRUE(h.ok()) << join_messages(h);
    }
  }
}

TEST(StructureProperties, RandomAllowedPrescriptions) {
  const SearchBudget budget = enumeration_budget();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 80; ++i) {
    const int nv = 2 + i % 6;
    const Graph g = random_graph(nv, 0.5, rng());
    std::vector<std::vector<int>> sets;
    for (int v = 0; v < nv; ++v) sets.push_back(random_allowed_set(rng));
    const Prescription p(sets);
    ASSERT_TRUE(p.allowed());
    const checks::Failures l = checks::lovasz_properties(g, p, budget);
    EXPECT_TRUE(l.ok()) << join_messages(l);
  }
}

TEST(StructureProperties, OptimumMatchesOracleAcrossWorkers) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const int nv = 2 + i % 7;
    const Graph g = random_graph(nv, 0.5, rng());
    std::vector<std::vector<int>> sets;
    for (int v = 0; v < nv; ++v) sets.push_back(random_allowed_set(rng));
    const Prescription p(sets);
    oracle::Instance in;
    in.n = nv;
    for (const Edge& e : g.edges()) in.edges.emplace_back(e.u, e.v);
    in.allowed = sets;
    const oracle::Solution want = oracle::solve(in);
    SearchBudget serial;
    SearchBudget parallel;
    parallel.workers = 4;
    const Optimum a = min_deviation(g, p, serial);
    const Optimum b = min_deviation(g, p, parallel);
    EXPECT_EQ(a.deviation, want.optimum);
    EXPECT_EQ(a.witness.mask(), b.witness.mask());
    EXPECT_EQ(a.witness.mask(), want.first_optimal);
  }
}

TEST(TheoremConsistency, OddFactorBiconditional) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 150; ++i) {
    const int nv = 1 + i % 8;
    const Graph g = random_graph(nv, 0.2 + 0.1 * (i % 6), rng());
    std::vector<int> h(static_cast<std::size_t>(nv));
    for (int& x : h) x = (rng() >> 63) != 0 ? 3 : 1;
    const VerifyReport r = verify_odd_factor_theorem(g, h);
    EXPECT_EQ(r.verdict, Verdict::kConsistent) << r.reason;
  }
}

TEST(TheoremConsistency, MainEvenAndOdd) {
  for (int i = 0; i < 150; ++i) {
    const int nv = 2 + i % 8;
    const Graph g = random_graph(nv, 0.5 + 0.1 * (i % 5), batch_seed(17, static_cast<std::uint64_t>(i)));
    for (int f : {4, 6}) {
      const DegreeFunction fn = DegreeFunction::constant(nv, f);
      const Verdict even = verify_main_even(g, fn).verdict;
      const Verdict odd = verify_main_odd(g, fn).verdict;
      EXPECT_NE(even, Verdict::kCounterexample);
      EXPECT_NE(even, Verdict::kUnknown);
      EXPECT_NE(odd, Verdict::kCounterexample);
      EXPECT_NE(odd, Verdict::kUnknown);
    }
  }
}

TEST(TheoremConsistency, NoFactorYieldsCorollaryWitness) {
  int without = 0;
  for (int i = 0; i < 200; ++i) {
    const int nv = 2 + i % 8;
    const Graph g = random_graph(nv, 0.4, batch_seed(23, static_cast<std::uint64_t>(i)));
    const DegreeFunction fn = DegreeFunction::constant(nv, 4);
    const FactorResult r = find_factor(g, make_hf(g, fn));
    ASSERT_NE(r.status, FactorStatus::kUnknown);
    if (r.status != FactorStatus::kNone) continue;
    ++without;
    const auto w = find_corollary_witness(g, fn);
    ASSERT_TRUE(w.has_value()) << io::graph_to_text(g);
    EXPECT_LT(w->value, 0);
    EXPECT_EQ(corollary_value(g, fn, w->s, w->t), w->value);
  }
  EXPECT_GT(without, 0);
}

TEST(TheoremConsistency, WitnessDoesNotRuleOutAFactor) {
  // The certificate is one-directional: this odd-order graph has an
  // H_4-factor (vertex 5 takes degree 4), yet (S, T) = ({}, {}) scores -1.
  const Graph g = Graph::build(7, {{0, 2}, {0, 5}, {0, 6}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {4, 6}});
  const DegreeFunction fn = DegreeFunction::constant(7, 4);
  EXPECT_EQ(find_factor(g, make_hf(g, fn)).status, FactorStatus::kFound);
  EXPECT_EQ(corollary_value(g, fn, {}, {}), -1);
}

}  // namespace
}  // namespace hfactor
