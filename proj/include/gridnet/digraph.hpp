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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridnet {

using Vertex = std::uint32_t;

/// Immutable directed graph on vertices 0..order-1, stored as compressed
/// out-adjacency. The order of each out-list is preserved exactly as given;
/// every derived structure (line digraph numbering, DOT/JSON output) relies
/// on it.
class Digraph {
 public:
  /// Throws std::invalid_argument on an empty vertex set, an out-of-range
  /// head, or a repeated head within one out-list.
  explicit Digraph(const std::vector<std::vector<Vertex>>& out_arcs) {
    if (out_arcs.empty()) {
      throw std::invalid_argument("digraph must have at least one vertex");
    }
    const auto n = out_arcs.size();
    offsets_.reserve(n + 1);
    offsets_.push_back(0);
    for (std::size_t u = 0; u < n; ++u) {
      const auto& list = out_arcs[u];
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] >= n) {
          throw std::invalid_argument("arc " + std::to_string(u) + "->" +
                                      std::to_string(list[i]) +
                                      " leaves the vertex set");
        }
        if (std::find(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(i),
                      list[i]) != list.begin() + static_cast<std::ptrdiff_t>(i)) {
          throw std::invalid_argument("parallel arc " + std::to_string(u) +
                                      "->" + std::to_string(list[i]));
        }
      }
      heads_.insert(heads_.end(), list.begin(), list.end());
      offsets_.push_back(heads_.size());
    }
  }

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t arc_count() const noexcept { return heads_.size(); }

  std::span<const Vertex> out(Vertex v) const {
    check(v);
    return {heads_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t out_degree(Vertex v) const {
    check(v);
    return offsets_[v + 1] - offsets_[v];
  }

  /// Index of the arc at position `pos` of `tail`'s out-list in the global
  /// (tail, position) ordering.
  std::size_t arc_index(Vertex tail, std::size_t pos) const {
    check(tail);
    return offsets_[tail] + pos;
  }

  bool has_arc(Vertex u, Vertex v) const {
    const auto heads = out(u);
    return std::find(heads.begin(), heads.end(), v) != heads.end();
  }

  std::vector<std::size_t> in_degrees() const {
    std::vector<std::size_t> deg(order(), 0);
    for (const auto h : heads_) ++deg[h];
    return deg;
  }

  /// Constant out-degree, or 0 when degrees differ.
  std::size_t regular_out_degree() const {
    const auto d = out_degree(0);
    for (Vertex v = 1; v < order(); ++v) {
      if (out_degree(v) != d) return 0;
    }
    return d;
  }

  std::vector<std::vector<Vertex>> adjacency() const {
    std::vector<std::vector<Vertex>> adj(order());
    for (Vertex v = 0; v < order(); ++v) {
      const auto heads = out(v);
      adj[v].assign(heads.begin(), heads.end());
    }
    return adj;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check(Vertex v) const {
    if (v >= order()) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range for order " +
                              std::to_string(order()));
    }
  }

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> heads_;
};

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
inline Digraph directed_cycle(std::size_t n) {
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (n > 1) adj[v].push_back(static_cast<Vertex>((v + 1) % n));
  }
  return Digraph(adj);
}

}  // namespace gridnet
