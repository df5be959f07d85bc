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

#ifndef HFACTOR_TOOLS_CLI_APP_HPP_
#define HFACTOR_TOOLS_CLI_APP_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hfactor/hfactor.hpp"
#include "hfactor/io.hpp"

namespace hfactor::cli {

using nlohmann::json;

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // proven none / violated / counterexample
inline constexpr int kExitUnknown = 2;   // budget or cap exhausted
inline constexpr int kExitInput = 3;

struct RunConfig {
  // Graph source: exactly one of graph_path or family.
  std::string graph_path;
  std::string family;
  int family_n = 2;
  int family_m = 0;
  int nv = 8;
  double p = 0.5;
  std::uint64_t seed = 0;

  // Prescription source: exactly one of these.
  std::string f;
  std::optional<int> hn;
  std::string h;
  std::string hfile;

  SearchBudget budget;
  ScanOptions scan;
  std::string format = "json";

  bool nonempty = false;
  bool include_empty = false;
  bool allow_non_allowed = false;
  std::string subgraph_path;

  std::string theorem;
  int random_count = 0;
};

namespace detail {

inline Graph load_graph(const RunConfig& c) {
  const bool has_path = !c.graph_path.empty();
  const bool has_family = !c.family.empty();
  if (has_path == has_family) {
    throw InputError("give exactly one of --graph or --family");
  }
  if (has_path) return io::load_graph(c.graph_path);
  if (c.family == "remark1") return remark1_graph(c.family_n);
  if (c.family == "remark2") return remark2_graph(c.family_n, c.family_m);
  if (c.family == "random") return random_graph(c.nv, c.p, c.seed);
  if (c.family == "complete") return complete(c.nv);
  throw InputError("unknown family \"" + c.family +
                   "\" (expected remark1, remark2, random or complete)");
}

inline bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

// "{1,3,4}" as a literal set of integers.
inline std::optional<std::vector<int>> brace_set(const std::string& s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') return std::nullopt;
  std::vector<int> out;
  std::string item;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const char ch = s[i];
    if (ch == ',') {
      if (!is_integer(item)) return std::nullopt;
      out.push_back(std::stoi(item));
      item.clear();
    } else if (ch != ' ') {
      item += ch;
    }
  }
  if (!item.empty()) {
    if (!is_integer(item)) return std::nullopt;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) return std::nullopt;
  return out;
}

inline io::PrescriptionSpec values_spec(io::PrescriptionSpec::Kind kind,
                                        const std::string& text) {
  io::PrescriptionSpec spec;
  spec.kind = kind;
  if (is_integer(text)) {
    spec.constant_value = std::stoi(text);
    return spec;
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    throw InputError("expected an integer or a JSON {vertex: integer} object, got \"" +
                     text + "\"");
  }
  json wrapped;
  wrapped[kind == io::PrescriptionSpec::Kind::kHf ? "f" : "h"] = j;
  return io::prescription_from_json(wrapped);
}

inline io::PrescriptionSpec prescription_spec(const RunConfig& c) {
  const int given = !c.f.empty() + c.hn.has_value() + !c.h.empty() + !c.hfile.empty();
  if (given != 1) {
    throw InputError("give exactly one of --f, --hn, --h, --hfile");
  }
  if (!c.f.empty()) return values_spec(io::PrescriptionSpec::Kind::kHf, c.f);
  if (c.hn) {
    io::PrescriptionSpec spec;
    spec.kind = io::PrescriptionSpec::Kind::kHn;
    spec.constant_value = *c.hn;
    return spec;
  }
  if (!c.hfile.empty()) return io::parse_prescription(io::read_file(c.hfile));
  if (c.h == "random") {
    io::PrescriptionSpec spec;
    spec.kind = io::PrescriptionSpec::Kind::kOdd;
    spec.random_odd = true;
    return spec;
  }
  if (auto set = brace_set(c.h)) {
    io::PrescriptionSpec spec;
    spec.kind = io::PrescriptionSpec::Kind::kSets;
    spec.constant_set = *set;
    return spec;
  }
  return values_spec(io::PrescriptionSpec::Kind::kOdd, c.h);
}

// h in {1, 3} per vertex, drawn from the instance seed.
inline std::vector<int> random_odd_values(int order, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x6f64642d68ULL);
  std::vector<int> out(static_cast<std::size_t>(order));
  for (int& x : out) x = (rng() >> 63) ? 3 : 1;
  return out;
}

inline Prescription resolve(const io::PrescriptionSpec& spec, const Graph& g,
                            std::uint64_t seed) {
  if (spec.random_odd) return make_odd(g, random_odd_values(g.order(), seed));
  return spec.resolve(g);
}

inline json graph_echo(const Graph& g) {
  return json{{"n", g.order()}, {"m", g.size()}, {"hash", io::graph_hash(g)}};
}

inline json budget_echo(const SearchBudget& b) {
  return json{{"max_edges_exhaustive", b.max_edges_exhaustive},
              {"max_edges_bnb", b.max_edges_bnb},
              {"max_local_search_steps", b.max_local_search_steps},
              {"search_seed", b.seed}};
}

inline json condition_json(const ConditionReport& r) {
  json j{{"holds", r.holds}, {"scanned", r.scanned}};
  if (r.violator) {
    j["violator"] = io::vertex_set_json(*r.violator);
    j["odd_components"] = r.odd_components;
    j["bound"] = r.bound;
  } else {
    j["violator"] = nullptr;
  }
  return j;
}

inline json factor_json(const FactorResult& r) {
  json j{{"status", to_string(r.status)}, {"mode", to_string(r.mode)}};
  if (r.min_deviation) j["min_deviation"] = *r.min_deviation;
  if (r.factor) j["edges"] = io::edges_json(r.factor->edge_list());
  return j;
}

inline void emit(std::ostream& out, const json& report, const std::string& format) {
  if (format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
}

inline int cmd_factor(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c);
  const io::PrescriptionSpec spec = prescription_spec(c);
  const Prescription p = resolve(spec, g, c.seed);
  json report{{"command", "factor"},
              {"graph", graph_echo(g)},
              {"prescription", spec.to_json()},
              {"budget", budget_echo(c.budget)}};
  const FactorResult r = find_factor(g, p, c.budget);
  report["result"] = factor_json(r);
  emit(out, report, c.format);
  switch (r.status) {
    case FactorStatus::kFound:
      return kExitOk;
    case FactorStatus::kNone:
      return kExitNegative;
    case FactorStatus::kUnknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

inline int cmd_decompose(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c);
  const io::PrescriptionSpec spec = prescription_spec(c);
  const Prescription p = resolve(spec, g, c.seed);
  const Decomposition dec = decompose(g, p, c.budget, c.allow_non_allowed);
  json spectra = json::object();
  for (Vertex v = 0; v < g.order(); ++v) {
    spectra[std::to_string(v)] = dec.spectra[static_cast<std::size_t>(v)];
  }
  json report{{"command", "decompose"},
              {"graph", graph_echo(g)},
              {"prescription", spec.to_json()},
              {"budget", budget_echo(c.budget)},
              {"A", io::vertex_set_json(dec.a)},
              {"B", io::vertex_set_json(dec.b)},
              {"C", io::vertex_set_json(dec.c)},
              {"D", io::vertex_set_json(dec.d)},
              {"spectra", spectra},
              {"nabla", dec.min_deviation},
              {"critical", is_connected(g) &&
                               static_cast<int>(dec.d.size()) == g.order()}};
  emit(out, report, c.format);
  return kExitOk;
}

inline int cmd_check(const RunConfig& c, std::ostream& out) {
  if (c.nonempty && c.include_empty) {
    throw InputError("--nonempty and --include-empty are exclusive");
  }
  const Graph g = load_graph(c);
  const io::PrescriptionSpec spec = prescription_spec(c);
  if (spec.random_odd) throw InputError("check needs fixed weights");
  const auto f = spec.weights(g);
  if (!f) throw InputError("check needs --f, --hn or an odd --h as weights");
  const ConditionReport r = check_condition(g, *f, !c.nonempty, c.scan);
  json report{{"command", "check"},
              {"graph", graph_echo(g)},
              {"prescription", spec.to_json()},
              {"include_empty", !c.nonempty},
              {"degree_hypothesis", check_degree_hypothesis(g, *f)},
              {"condition", condition_json(r)}};
  emit(out, report, c.format);
  return r.holds ? kExitOk : kExitNegative;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (c.theorem != "main-even" && c.theorem != "main-odd" && c.theorem != "odd-iff") {
    throw InputError("--theorem must be main-even, main-odd or odd-iff");
  }
  const io::PrescriptionSpec spec = prescription_spec(c);
  const bool odd_theorem = c.theorem == "odd-iff";
  if (odd_theorem && spec.kind != io::PrescriptionSpec::Kind::kOdd) {
    throw InputError("odd-iff needs --h with odd values");
  }
  if (!odd_theorem && spec.kind != io::PrescriptionSpec::Kind::kHf &&
      spec.kind != io::PrescriptionSpec::Kind::kHn) {
    throw InputError(c.theorem + " needs --f or --hn");
  }

  struct Instance {
    Graph graph;
    std::uint64_t seed = 0;
  };
  std::vector<Instance> instances;
  if (c.random_count > 0) {
    if (!c.graph_path.empty() || !c.family.empty()) {
      throw InputError("--random replaces --graph/--family");
    }
    for (int i = 0; i < c.random_count; ++i) {
      const std::uint64_t s = batch_seed(c.seed, static_cast<std::uint64_t>(i));
      instances.push_back({random_graph(c.nv, c.p, s), s});
    }
  } else {
    instances.push_back({load_graph(c), c.seed});
  }

  json entries = json::array();
  std::map<std::string, int> tally;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Graph& g = instances[i].graph;
    json entry{{"index", i}, {"seed", instances[i].seed}, {"graph", graph_echo(g)}};
    VerifyReport r;
    try {
      if (odd_theorem) {
        const std::vector<int> h = spec.random_odd
                                       ? random_odd_values(g.order(), instances[i].seed)
                                       : spec.values(g);
        entry["h"] = h;
        r = verify_odd_factor_theorem(g, h, c.budget, c.scan);
      } else {
        const DegreeFunction f = *spec.weights(g);
        r = c.theorem == "main-even" ? verify_main_even(g, f, c.budget, c.scan)
                                     : verify_main_odd(g, f, c.budget, c.scan);
      }
    } catch (const BudgetExceeded& ex) {
      r.verdict = Verdict::kUnknown;
      r.reason = ex.what();
    }
    entry["verdict"] = to_string(r.verdict);
    entry["reason"] = r.reason;
    if (r.degree_hypothesis) entry["degree_hypothesis"] = *r.degree_hypothesis;
    if (r.condition) entry["condition"] = condition_json(*r.condition);
    if (r.factor) entry["factor"] = factor_json(*r.factor);
    ++tally[to_string(r.verdict)];
    entries.push_back(std::move(entry));
  }
  json summary = json::object();
  for (const auto& [k, v] : tally) summary[k] = v;
  json report{{"command", "verify"},
              {"theorem", c.theorem},
              {"prescription", spec.to_json()},
              {"budget", budget_echo(c.budget)},
              {"instances", static_cast<int>(instances.size())},
              {"summary", summary},
              {"results", entries}};
  emit(out, report, c.format);
  if (tally.count("COUNTEREXAMPLE")) return kExitNegative;
  if (tally.count("unknown")) return kExitUnknown;
  return kExitOk;
}

inline int cmd_family(const RunConfig& c, std::ostream& out) {
  if (c.family.empty()) throw InputError("family needs --family");
  const Graph g = load_graph(c);
  if (c.format == "text") {
    out << io::graph_to_text(g);
  } else {
    out << io::graph_to_json(g).dump() << "\n";
  }
  return kExitOk;
}

inline int cmd_deviation(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c);
  const io::PrescriptionSpec spec = prescription_spec(c);
  const Prescription p = resolve(spec, g, c.seed);
  std::optional<SpanningSubgraph> f;
  if (!c.subgraph_path.empty()) {
    f = io::parse_subgraph(g, io::read_file(c.subgraph_path));
  } else if (c.family == "remark2") {
    f = remark2_witness_factor(g, c.family_n, c.family_m);
  } else {
    throw InputError("deviation needs --subgraph (or --family remark2 for its witness)");
  }
  json per_vertex = json::array();
  for (Vertex v = 0; v < g.order(); ++v) per_vertex.push_back(p.distance(v, f->degree(v)));
  json report{{"command", "deviation"},
              {"graph", graph_echo(g)},
              {"prescription", spec.to_json()},
              {"edges", io::edges_json(f->edge_list())},
              {"degrees", f->degrees()},
              {"per_vertex", per_vertex},
              {"deviation", deviation(*f, p)}};
  emit(out, report, c.format);
  return kExitOk;
}

inline void add_graph_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--graph", c.graph_path, "Edge-list text or JSON graph file");
  sub->add_option("--family", c.family, "remark1 | remark2 | random | complete");
  sub->add_option("--n", c.family_n, "Family parameter n");
  sub->add_option("--m", c.family_m, "Family parameter m (remark2)");
  sub->add_option("--nv", c.nv, "Vertex count (random, complete)");
  sub->add_option("--p", c.p, "Edge probability (random)");
  sub->add_option("--seed", c.seed, "Random graph / batch seed");
}

inline void add_prescription_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--f", c.f, "H_f: even f >= 4, integer or {vertex: int} JSON");
  sub->add_option("--hn", c.hn, "H_n = {1,3,...,2n-1,2n}");
  sub->add_option("--h", c.h,
                  "odd h (integer, {vertex: int} JSON or 'random'), or a literal "
                  "set such as {1,3,4}");
  sub->add_option("--hfile", c.hfile, "Prescription JSON file");
}

inline void add_budget_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--max-exhaustive", c.budget.max_edges_exhaustive,
                  "Edge limit for 2^|E| enumeration");
  sub->add_option("--max-bnb", c.budget.max_edges_bnb,
                  "Edge limit for branch-and-bound");
  sub->add_option("--max-steps", c.budget.max_local_search_steps,
                  "Local search step budget");
  sub->add_option("--search-seed", c.budget.seed, "Local search seed");
  sub->add_option("--workers", c.budget.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-vertices", c.scan.max_vertices, "Subset scan vertex cap");
}

}  // namespace detail

// Runs the command line and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  RunConfig c;
  CLI::App app{"Degree-prescribed subgraph (H-factor) toolkit"};
  // --h is a prescription flag, so help is --help only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.add_option("--format", c.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* factor = app.add_subcommand("factor", "Find an H-factor");
  auto* decompose_cmd = app.add_subcommand("decompose", "A/B/C/D decomposition");
  auto* check = app.add_subcommand("check", "Check o(G-S) <= f(S) over all S");
  auto* verify = app.add_subcommand("verify", "Check a theorem on instances");
  auto* family = app.add_subcommand("family", "Emit a family graph");
  auto* deviation_cmd = app.add_subcommand("deviation", "Deviation of a subgraph");
  for (auto* sub : {factor, decompose_cmd, check, verify, family, deviation_cmd}) {
    detail::add_graph_options(sub, c);
    sub->add_option("--format", c.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
  }
  for (auto* sub : {factor, decompose_cmd, check, verify, deviation_cmd}) {
    detail::add_prescription_options(sub, c);
  }
  for (auto* sub : {factor, decompose_cmd, check, verify}) {
    detail::add_budget_options(sub, c);
  }
  decompose_cmd->add_flag("--allow-non-allowed", c.allow_non_allowed,
                          "Accept prescriptions with gaps of two or more");
  check->add_flag("--nonempty", c.nonempty, "Only nonempty S");
  check->add_flag("--include-empty", c.include_empty, "Include S = {} (default)");
  verify->add_option("--theorem", c.theorem, "main-even | main-odd | odd-iff")
      ->required();
  verify->add_option("--random", c.random_count, "Number of random instances");
  deviation_cmd->add_option("--subgraph", c.subgraph_path, "Subgraph edge file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    c.budget.validate();
    if (factor->parsed()) return detail::cmd_factor(c, out);
    if (decompose_cmd->parsed()) return detail::cmd_decompose(c, out);
    if (check->parsed()) return detail::cmd_check(c, out);
    if (verify->parsed()) return detail::cmd_verify(c, out);
    if (family->parsed()) return detail::cmd_family(c, out);
    if (deviation_cmd->parsed()) return detail::cmd_deviation(c, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace hfactor::cli

#endif  // HFACTOR_TOOLS_CLI_APP_HPP_
