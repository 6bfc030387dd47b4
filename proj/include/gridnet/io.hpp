// Copyright 2026 The gridnet Authors
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

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gridnet/digraph.hpp"
#include "json.hpp"

namespace gridnet {

/// Graphviz text: one node statement per vertex, then every arc in
/// adjacency order. Output depends only on the digraph.
inline std::string to_dot(const Digraph& g, std::string_view name = "G") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (Vertex u = 0; u < g.order(); ++u) {
    for (const Vertex v : g.out(u)) os << "  " << u << " -> " << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

/// {"order":n,"arcs":[[heads of 0],...]} in compact form.
inline std::string to_json(const Digraph& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order();
  auto arcs = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto heads = g.out(v);
    arcs.push_back(std::vector<Vertex>(heads.begin(), heads.end()));
  }
  j["arcs"] = std::move(arcs);
  return j.dump();
}

/// Inverse of to_json. Throws std::invalid_argument on malformed input or
/// when `order` disagrees with the number of adjacency lists.
inline Digraph digraph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed digraph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("arcs") ||
      !j["order"].is_number_unsigned() || !j["arcs"].is_array()) {
    throw std::invalid_argument(
        "digraph JSON needs an unsigned \"order\" and an \"arcs\" array");
  }
  const auto order = j["order"].get<std::size_t>();
  const auto& arcs = j["arcs"];
  if (arcs.size() != order) {
    throw std::invalid_argument("digraph JSON: order " + std::to_string(order) +
                                " but " + std::to_string(arcs.size()) +
                                " adjacency lists");
  }
  std::vector<std::vector<Vertex>> adj(order);
  for (std::size_t v = 0; v < order; ++v) {
    if (!arcs[v].is_array()) {
      throw std::invalid_argument("digraph JSON: arcs[" + std::to_string(v) +
                                  "] is not an array");
    }
    for (const auto& h : arcs[v]) {
      if (!h.is_number_unsigned() || h.get<std::uint64_t>() >= order) {
        throw std::invalid_argument("digraph JSON: invalid head in arcs[" +
                                    std::to_string(v) + "]");
      }
      adj[v].push_back(h.get<Vertex>());
    }
  }
  return Digraph(adj);
}

}  // namespace gridnet
