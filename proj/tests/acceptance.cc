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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hfactor/hfactor.hpp"
#include "hfactor/io.hpp"
#include "lovasz_checks.hpp"

namespace {

using namespace hfactor;
using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << x;
  return out.str();
}

// The structure ensemble: graphs with 1..8 vertices and p cycling through
// 0.3, 0.5, 0.7, each paired with H_2, H_3 and a per-vertex f in {4, 6}.
constexpr int kEnsembleGraphs = 504;
constexpr std::array<double, 3> kDensities{0.3, 0.5, 0.7};

struct EnsembleInstance {
  Graph graph;
  DegreeFunction f;
  std::string label;
};

std::vector<EnsembleInstance> ensemble() {
  std::vector<EnsembleInstance> out;
  for (int i = 0; i < kEnsembleGraphs; ++i) {
    const int nv = 1 + i % 8;
    const double p = kDensities[static_cast<std::size_t>(i / 8 % 3)];
    const std::uint64_t seed = batch_seed(2026, static_cast<std::uint64_t>(i));
    const Graph g = random_graph(nv, p, seed);
    std::mt19937_64 rng(seed);
    std::vector<int> mixed(static_cast<std::size_t>(nv));
    for (int& x : mixed) x = (rng() >> 63) != 0 ? 6 : 4;
    const std::string tag = "graph " + std::to_string(i);
    out.push_back({g, DegreeFunction::constant(nv, 4), tag + " H_2"});
    out.push_back({g, DegreeFunction::constant(nv, 6), tag + " H_3"});
    out.push_back({g, DegreeFunction(mixed), tag + " f in {4,6}"});
  }
  return out;
}

SearchBudget enumeration_budget() {
  SearchBudget b;
  b.max_edges_exhaustive = 28;
  return b;
}

Result remark_one() {
  const auto start = Clock::now();
  Result r;
  const Graph g = remark1_graph(2);
  const DegreeFunction f = DegreeFunction::constant(7, 4);
  r.pass &= g.order() == 7 && g.size() == 10 && g.min_degree() == 2;
  const FactorResult search = find_factor(g, make_hf(g, f));
  r.pass &= search.status == FactorStatus::kNone && search.mode == SearchMode::kExhaustive;
  // The scan covers every nonempty proper subset; S = V leaves no components.
  const ConditionReport cond = check_condition(g, f, /*include_empty=*/false);
  const bool whole = odd_components(g, VertexSet::range(7)) <= f.sum(VertexSet::range(7));
  r.pass &= cond.holds && cond.scanned == 126 && whole;
  const double t = seconds_since(start);
  r.pass &= t < 1.0;
  r.detail = "n=7 m=10 delta=2, exhaustive search finds no factor, condition holds on " +
             std::to_string(cond.scanned + 1) + " nonempty subsets, " + fixed(t) + "s";
  return r;
}

Result remark_two() {
  const auto start = Clock::now();
  Result r;
  const Graph g = remark2_graph(2, 6);
  const ConditionReport cond =
      check_condition(g, DegreeFunction::constant(g.order(), 4), /*include_empty=*/false);
  r.pass &= !cond.holds && cond.violator == VertexSet{0} && cond.odd_components == 6 &&
            cond.bound == 4;
  const long dev = deviation(remark2_witness_factor(g, 2, 6), make_hn(g, 2));
  r.pass &= dev == 0;
  const double t = seconds_since(start);
  r.pass &= t < 1.0;
  r.detail = "violator S={0} with o=" + std::to_string(cond.odd_components) + " > " +
             std::to_string(cond.bound) + ", witness deviation " + std::to_string(dev) + ", " +
             fixed(t) + "s";
  return r;
}

Result criticality() {
  const auto start = Clock::now();
  Result r;
  const Graph g = complete(3);
  const Prescription p = make_hn(g, 2);
  const Decomposition dec = decompose(g, p);
  r.pass &= dec.min_deviation == 1 && dec.d == VertexSet::range(3);
  r.pass &= dec.a.empty() && dec.b.empty() && dec.c.empty();
  for (const auto& s : dec.spectra) r.pass &= s == std::vector<int>{0, 1, 2};
  r.pass &= is_critical(g, p);
  const double t = seconds_since(start);
  r.pass &= t < 1.0;
  r.detail = "nabla=" + std::to_string(dec.min_deviation) +
             ", D=V, spectra {0,1,2}, critical, " + fixed(t) + "s";
  return r;
}

struct EnsembleOutcome {
  Result structure;
  Result deficiency;
  Result certificate;
};

EnsembleOutcome structure_ensemble() {
  const auto start = Clock::now();
  const SearchBudget budget = enumeration_budget();
  EnsembleOutcome out;
  long violations = 0;
  long deficiency_mismatch = 0;
  long no_factor = 0;
  long missing_witness = 0;
  std::string first_failure;
  const auto instances = ensemble();
  for (const EnsembleInstance& in : instances) {
    Decomposition dec;
    const Prescription p = make_hf(in.graph, in.f);
    checks::Failures fail = checks::lovasz_properties(in.graph, p, budget, &dec);
    const checks::Failures hf = checks::hf_properties(in.graph, in.f, budget, dec);
    fail.messages.insert(fail.messages.end(), hf.messages.begin(), hf.messages.end());
    violations += static_cast<long>(fail.messages.size());
    if (!fail.ok() && first_failure.empty()) first_failure = in.label + ": " + fail.messages[0];

    if (structural_deficiency(in.graph, p, dec) != dec.min_deviation) ++deficiency_mismatch;

    if (dec.min_deviation > 0) {
      ++no_factor;
      const auto w = find_corollary_witness(in.graph, in.f);
      if (!w || w->value >= 0 ||
          corollary_value(in.graph, in.f, w->s, w->t) != w->value) {
        ++missing_witness;
      }
    }
  }
  const double t = seconds_since(start);
  const std::string count = std::to_string(instances.size()) + " instances on " +
                            std::to_string(kEnsembleGraphs) + " graphs";
  out.structure.pass = violations == 0 && t <= 600.0;
  out.structure.detail = count + ", " + std::to_string(violations) +
                         " violations of the structure properties, " + fixed(t) + "s";
  if (!first_failure.empty()) out.structure.detail += "; first: " + first_failure;
  out.deficiency.pass = deficiency_mismatch == 0;
  out.deficiency.detail = count + ", " + std::to_string(deficiency_mismatch) +
                          " mismatches between nabla and the deficiency formula";
  out.certificate.pass = missing_witness == 0 && no_factor > 0;
  out.certificate.detail = std::to_string(no_factor) + " instances without a factor, " +
                           std::to_string(missing_witness) + " missing a negative witness";
  return out;
}

std::string tally_text(const std::map<Verdict, int>& tally) {
  std::string out;
  for (const auto& [v, n] : tally) {
    if (!out.empty()) out += ", ";
    out += to_string(v) + " " + std::to_string(n);
  }
  return out;
}

Result main_theorems() {
  Result r;
  std::map<Verdict, int> even;
  std::map<Verdict, int> odd;
  constexpr int kPerTheorem = 520;
  for (int i = 0; i < kPerTheorem; ++i) {
    const std::uint64_t seed = batch_seed(1506, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(seed);
    const int f_value = (i % 2 == 0) ? 4 : 6;
    const int even_n = 2 + 2 * (i % 4);
    const Graph g = random_graph(even_n, 0.3 + 0.1 * (i % 6), rng());
    ++even[verify_main_even(g, DegreeFunction::constant(even_n, f_value)).verdict];
  }
  // Odd order: keep drawing dense graphs until one is connected and meets
  // the degree hypothesis, so every counted instance is in scope.
  int drawn = 0;
  for (int i = 0; i < kPerTheorem; ++i) {
    const std::uint64_t seed = batch_seed(1606, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(seed);
    const int f_value = (i % 2 == 0) ? 4 : 6;
    const int odd_n = f_value == 4 ? 5 + 2 * (i / 2 % 3) : 7 + 2 * (i / 2 % 2);
    const DegreeFunction f = DegreeFunction::constant(odd_n, f_value);
    while (true) {
      ++drawn;
      const Graph g = random_graph(odd_n, 0.6 + 0.1 * (i % 4), rng());
      if (!is_connected(g) || !check_degree_hypothesis(g, f)) continue;
      ++odd[verify_main_odd(g, f).verdict];
      break;
    }
  }
  r.pass = even[Verdict::kCounterexample] == 0 && odd[Verdict::kCounterexample] == 0 &&
           even[Verdict::kUnknown] == 0 && odd[Verdict::kUnknown] == 0 &&
           even[Verdict::kInapplicable] == 0 && odd[Verdict::kInapplicable] == 0 &&
           even[Verdict::kConsistent] > 0 && odd[Verdict::kConsistent] > 0;
  std::erase_if(even, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(odd, [](const auto& kv) { return kv.second == 0; });
  r.detail = "even order (" + std::to_string(kPerTheorem) + "): " + tally_text(even) +
             "; odd order, connected, degree hypothesis (" + std::to_string(kPerTheorem) +
             " of " + std::to_string(drawn) + " drawn): " + tally_text(odd);
  return r;
}

Result odd_factor_biconditional() {
  Result r;
  std::map<Verdict, int> tally;
  int with_factor = 0;
  constexpr int kInstances = 540;
  for (int i = 0; i < kInstances; ++i) {
    const std::uint64_t seed = batch_seed(1112, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(seed);
    const int nv = 1 + i % 8;
    const Graph g = random_graph(nv, kDensities[static_cast<std::size_t>(i / 8 % 3)], rng());
    std::vector<int> h(static_cast<std::size_t>(nv));
    for (int& x : h) {
      switch (i % 3) {
        case 0: x = 1; break;
        case 1: x = 3; break;
        default: x = (rng() >> 63) != 0 ? 3 : 1; break;
      }
    }
    const VerifyReport rep = verify_odd_factor_theorem(g, h);
    ++tally[rep.verdict];
    if (rep.factor && rep.factor->status == FactorStatus::kFound) ++with_factor;
  }
  r.pass = tally[Verdict::kConsistent] == kInstances;
  std::erase_if(tally, [](const auto& kv) { return kv.second == 0; });
  r.detail = std::to_string(kInstances) + " instances (h=1, h=3, random per vertex), " +
             tally_text(tally) + ", " + std::to_string(with_factor) + " with a factor";
  return r;
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured run_cli(const std::string& args) {
  Captured c;
  const std::string command = std::string(HFACTOR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
  c.status = pclose(pipe);
  return c;
}

Result determinism() {
  Result r;
  const std::string data = HFACTOR_DATA_DIR;
  const std::vector<std::string> commands = {
      "factor --family remark2 --n 2 --m 6 --hn 2",
      "factor --family random --nv 12 --p 0.5 --seed 3 --hn 2",
      "decompose --family random --nv 8 --p 0.5 --seed 4 --hn 2",
      "check --family remark1 --n 2 --f 4 --nonempty",
      "verify --theorem main-even --random 60 --nv 8 --p 0.5 --f 4 --seed 7",
      "verify --theorem odd-iff --random 60 --nv 7 --h random --seed 7 --format text",
      "verify --theorem main-odd --graph " + data + "/k5.json --f 4",
  };
  int identical = 0;
  for (const std::string& cmd : commands) {
    const Captured a = run_cli(cmd + " --workers 1");
    const Captured b = run_cli(cmd + " --workers 4");
    const Captured c = run_cli(cmd + " --workers 4");
    const bool same = !a.out.empty() && a.out == b.out && b.out == c.out &&
                      a.status == b.status && b.status == c.status;
    identical += same;
    if (!same && r.detail.empty()) r.detail = "differs: " + cmd + "; ";
  }
  r.pass = identical == static_cast<int>(commands.size());
  r.detail += std::to_string(identical) + "/" + std::to_string(commands.size()) +
              " commands byte-identical across workers 1, 4 and a repeat";
  return r;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& name, const Result& r) {
    std::cout << "criterion " << id << " " << (r.pass ? "PASS" : "FAIL") << " " << name
              << ": " << r.detail << std::endl;
    failures += !r.pass;
  };
  auto guarded = [&](const std::function<Result()>& body) {
    try {
      return body();
    } catch (const std::exception& ex) {
      return Result{false, std::string("threw: ") + ex.what()};
    }
  };

  report(1, "remark 1 fixture", guarded(remark_one));
  report(2, "remark 2 fixture", guarded(remark_two));
  report(3, "criticality fixture", guarded(criticality));
  EnsembleOutcome ens;
  try {
    ens = structure_ensemble();
  } catch (const std::exception& ex) {
    const Result bad{false, std::string("threw: ") + ex.what()};
    ens = {bad, bad, bad};
  }
  report(4, "structure properties", ens.structure);
  report(5, "deficiency formula", ens.deficiency);
  report(6, "main theorem implications", guarded(main_theorems));
  report(7, "odd factor biconditional", guarded(odd_factor_biconditional));
  report(8, "corollary certificate", ens.certificate);
  report(9, "determinism", guarded(determinism));
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " failing")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
