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

#ifndef HFACTOR_IO_HPP_
#define HFACTOR_IO_HPP_

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hfactor/error.hpp"
#include "hfactor/graph.hpp"
#include "hfactor/prescription.hpp"

namespace hfactor::io {

using nlohmann::json;

// "n m" followed by m lines "u v".
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long n = 0;
  long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw InputError("edge list must start with \"n m\"");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) {
      throw InputError("edge list ended after " + std::to_string(i) + " of " +
                       std::to_string(m) + " edges");
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw InputError("unexpected trailing token \"" + extra + "\"");
  return Graph::build(static_cast<int>(n), pairs);
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InputError("graph JSON needs \"n\" and \"edges\"");
  }
  try {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw InputError("each edge must be a pair [u, v]");
      }
      pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::build(j.at("n").get<int>(), pairs);
  } catch (const json::exception& ex) {
    throw InputError(std::string("bad graph JSON: ") + ex.what());
  }
}

// Text or JSON, told apart by the first non-blank character.
inline Graph parse_graph(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& ex) {
        throw InputError(std::string("bad graph JSON: ") + ex.what());
      }
      return graph_from_json(j);
    }
    break;
  }
  return parse_edge_list(text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Graph load_graph(const std::string& path) {
  return parse_graph(read_file(path));
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline std::string graph_to_text(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

// FNV-1a over the canonical text form, as 16 hex digits.
inline std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : graph_to_text(g)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// One of the four ways a prescription can be given. Per-vertex values are
// resolved against a graph once it is known.
struct PrescriptionSpec {
  enum class Kind { kSets, kHf, kHn, kOdd };

  Kind kind = Kind::kSets;
  // kSets: one set for every vertex, or an explicit per-vertex map.
  std::optional<std::vector<int>> constant_set;
  std::map<int, std::vector<int>> per_vertex_sets;
  // kHf / kOdd: a constant or a per-vertex map. kHn: n.
  std::optional<int> constant_value;
  std::map<int, int> per_vertex_values;
  // Fresh random odd h in {1, 3} per vertex (kOdd only).
  bool random_odd = false;

  std::vector<int> values(const Graph& g) const {
    std::vector<int> out(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      if (constant_value) {
        out[static_cast<std::size_t>(v)] = *constant_value;
        continue;
      }
      auto it = per_vertex_values.find(v);
      if (it == per_vertex_values.end()) {
        throw InputError("no value given for vertex " + std::to_string(v));
      }
      out[static_cast<std::size_t>(v)] = it->second;
    }
    if (per_vertex_values.size() > out.size() ||
        (!per_vertex_values.empty() && per_vertex_values.rbegin()->first >= g.order())) {
      throw InputError("prescription names vertices outside the graph");
    }
    return out;
  }

  // f for H_f and 2n for H_n: the weights in o(G - S) <= f(S). For odd
  // prescriptions h itself.
  std::optional<DegreeFunction> weights(const Graph& g) const {
    switch (kind) {
      case Kind::kHf:
      case Kind::kOdd:
        return DegreeFunction(values(g));
      case Kind::kHn:
        return DegreeFunction::constant(g.order(), 2 * *constant_value);
      case Kind::kSets:
        return std::nullopt;
    }
    return std::nullopt;
  }

  Prescription resolve(const Graph& g) const {
    switch (kind) {
      case Kind::kHf:
        return make_hf(g, DegreeFunction(values(g)));
      case Kind::kHn:
        return make_hn(g, *constant_value);
      case Kind::kOdd:
        return make_odd(g, values(g));
      case Kind::kSets: {
        if (constant_set) return Prescription::constant(g.order(), *constant_set);
        std::vector<std::vector<int>> sets(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) {
          auto it = per_vertex_sets.find(v);
          if (it == per_vertex_sets.end()) {
            throw InputError("no H(v) given for vertex " + std::to_string(v));
          }
          sets[static_cast<std::size_t>(v)] = it->second;
        }
        if (!per_vertex_sets.empty() && per_vertex_sets.rbegin()->first >= g.order()) {
          throw InputError("prescription names vertices outside the graph");
        }
        return Prescription(std::move(sets));
      }
    }
    throw InputError("unknown prescription kind");
  }

  json to_json() const {
    json j;
    auto value_json = [&]() -> json {
      if (constant_value) return *constant_value;
      if (random_odd) return "random";
      json m = json::object();
      for (const auto& [v, x] : per_vertex_values) m[std::to_string(v)] = x;
      return m;
    };
    switch (kind) {
      case Kind::kHf:
        j["f"] = value_json();
        break;
      case Kind::kHn:
        j["n"] = *constant_value;
        break;
      case Kind::kOdd:
        j["h"] = value_json();
        break;
      case Kind::kSets:
        if (constant_set) {
          j["H"] = *constant_set;
        } else {
          json m = json::object();
          for (const auto& [v, s] : per_vertex_sets) m[std::to_string(v)] = s;
          j["H"] = m;
        }
        break;
    }
    return j;
  }
};

namespace detail {

inline int vertex_key(const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used != key.size() || v < 0) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("\"" + key + "\" is not a vertex label");
  }
}

inline void read_values(const json& j, PrescriptionSpec& spec) {
  if (j.is_number_integer()) {
    spec.constant_value = j.get<int>();
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      spec.per_vertex_values[vertex_key(key)] = value.get<int>();
    }
  } else {
    throw InputError("expected an integer or a {vertex: integer} object");
  }
}

}  // namespace detail

// {"H": {vertex: [ints]}} (or one list for every vertex), {"f": int |
// {vertex: int}}, {"n": int} or {"h": int | {vertex: int}}.
inline PrescriptionSpec prescription_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw InputError("prescription JSON needs exactly one of H, f, n, h");
  }
  PrescriptionSpec spec;
  try {
    if (j.contains("H")) {
      spec.kind = PrescriptionSpec::Kind::kSets;
      const json& h = j.at("H");
      if (h.is_array()) {
        spec.constant_set = h.get<std::vector<int>>();
      } else if (h.is_object()) {
        for (const auto& [key, value] : h.items()) {
          spec.per_vertex_sets[detail::vertex_key(key)] = value.get<std::vector<int>>();
        }
      } else {
        throw InputError("\"H\" must be a list or a {vertex: [ints]} object");
      }
    } else if (j.contains("f")) {
      spec.kind = PrescriptionSpec::Kind::kHf;
      detail::read_values(j.at("f"), spec);
    } else if (j.contains("n")) {
      spec.kind = PrescriptionSpec::Kind::kHn;
      spec.constant_value = j.at("n").get<int>();
    } else if (j.contains("h")) {
      spec.kind = PrescriptionSpec::Kind::kOdd;
      detail::read_values(j.at("h"), spec);
    } else {
      throw InputError("prescription JSON needs exactly one of H, f, n, h");
    }
  } catch (const json::exception& ex) {
    throw InputError(std::string("bad prescription JSON: ") + ex.what());
  }
  return spec;
}

inline PrescriptionSpec parse_prescription(const std::string& text) {
  try {
    return prescription_from_json(json::parse(text));
  } catch (const json::exception& ex) {
    throw InputError(std::string("bad prescription JSON: ") + ex.what());
  }
}

// Subgraph as {"edges": [[u, v], ...]}, a bare JSON list of pairs, or the
// edge-list text form "k" followed by k lines "u v".
inline SpanningSubgraph parse_subgraph(const Graph& host, const std::string& text) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && (text[start] == '{' || text[start] == '[')) {
    try {
      json j = json::parse(text);
      const json& edges = j.is_object() ? j.at("edges") : j;
      for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) throw InputError("each edge must be [u, v]");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    } catch (const json::exception& ex) {
      throw InputError(std::string("bad subgraph JSON: ") + ex.what());
    }
  } else {
    std::istringstream in(text);
    long k = 0;
    if (!(in >> k) || k < 0) throw InputError("subgraph text must start with the edge count");
    for (long i = 0; i < k; ++i) {
      long u = 0;
      long v = 0;
      if (!(in >> u >> v)) throw InputError("subgraph text ended early");
      pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return SpanningSubgraph::from_pairs(host, pairs);
}

inline json vertex_set_json(const VertexSet& s) { return s.members(); }

inline json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace hfactor::io

#endif  // HFACTOR_IO_HPP_
