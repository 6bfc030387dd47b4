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
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridnet/digraph.hpp"

namespace gridnet {

/// Shortest-path length; std::nullopt means unreachable.
using Distance = std::optional<std::uint32_t>;
using DistanceMatrix = std::vector<std::vector<Distance>>;

struct DistanceProfile {
  Vertex source = 0;
  std::vector<Distance> dist;
  /// Largest finite distance from source.
  std::uint32_t eccentricity = 0;
  /// Vertices at distance `eccentricity`; {source} when nothing else is
  /// reachable.
  std::vector<Vertex> farthest;

  bool reaches_all() const {
    return std::all_of(dist.begin(), dist.end(),
                       [](const Distance& d) { return d.has_value(); });
  }
};

namespace detail {

inline constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

/// Reusable BFS buffers for repeated sweeps over graphs of bounded order.
class BfsScratch {
 public:
  /// Eccentricity of `source`, or nullopt when it exceeds `limit` or some
  /// vertex is unreachable. Stops as soon as either is certain.
  std::optional<std::uint32_t> eccentricity(const Digraph& g, Vertex source,
                                            std::uint32_t limit) {
    const auto n = g.order();
    dist_.assign(n, kUnseen);
    queue_.resize(n);
    std::size_t head = 0;
    std::size_t tail = 0;
    dist_[source] = 0;
    queue_[tail++] = source;
    std::uint32_t ecc = 0;
    while (head < tail) {
      const Vertex u = queue_[head++];
      const auto du = dist_[u];
      for (const Vertex v : g.out(u)) {
        if (dist_[v] != kUnseen) continue;
        if (du + 1 > limit) return std::nullopt;
        dist_[v] = du + 1;
        ecc = du + 1;
        queue_[tail++] = v;
      }
    }
    if (tail != n) return std::nullopt;
    return ecc;
  }

 private:
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> queue_;
};

}  // namespace detail

inline DistanceProfile bfs_profile(const Digraph& g, Vertex source) {
  if (source >= g.order()) {
    throw std::out_of_range("source " + std::to_string(source) +
                            " out of range for order " +
                            std::to_string(g.order()));
  }
  DistanceProfile p;
  p.source = source;
  p.dist.assign(g.order(), std::nullopt);
  p.dist[source] = 0;
  std::vector<Vertex> queue{source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (const Vertex v : g.out(u)) {
      if (p.dist[v]) continue;
      p.dist[v] = *p.dist[u] + 1;
      p.eccentricity = *p.dist[v];
      queue.push_back(v);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (p.dist[v] && *p.dist[v] == p.eccentricity) p.farthest.push_back(v);
  }
  return p;
}

/// Largest eccentricity over all sources; nullopt if the digraph is not
/// strongly connected.
inline std::optional<std::uint32_t> diameter(const Digraph& g) {
  detail::BfsScratch scratch;
  std::uint32_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto e = scratch.eccentricity(g, s, detail::kUnseen - 1);
    if (!e) return std::nullopt;
    best = std::max(best, *e);
  }
  return best;
}

/// Diameter if it is at most `limit`; nullopt when larger or disconnected.
inline std::optional<std::uint32_t> diameter_at_most(const Digraph& g,
                                                     std::uint32_t limit) {
  detail::BfsScratch scratch;
  std::uint32_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto e = scratch.eccentricity(g, s, limit);
    if (!e) return std::nullopt;
    best = std::max(best, *e);
  }
  return best;
}

inline constexpr std::size_t kOracleOrderCap = 512;

/// Distance matrix by Floyd-Warshall relaxation. Shares no code with the
/// BFS routines so that it can serve as their oracle.
inline DistanceMatrix all_pairs_oracle(const Digraph& g) {
  const auto n = g.order();
  if (n > kOracleOrderCap) {
    throw std::length_error("all_pairs_oracle: order " + std::to_string(n) +
                            " exceeds cap " + std::to_string(kOracleOrderCap));
  }
  constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max() / 4;
  std::vector<std::uint64_t> d(n * n, inf);
  for (std::size_t u = 0; u < n; ++u) {
    d[u * n + u] = 0;
    for (const Vertex v : g.out(static_cast<Vertex>(u))) {
      if (v != u) d[u * n + v] = 1;
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) {
      const auto uw = d[u * n + w];
      if (uw == inf) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const auto via = uw + d[w * n + v];
        if (via < d[u * n + v]) d[u * n + v] = via;
      }
    }
  }
  DistanceMatrix m(n, std::vector<Distance>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (d[u * n + v] != inf) m[u][v] = static_cast<std::uint32_t>(d[u * n + v]);
    }
  }
  return m;
}

/// Maximum entry of a distance matrix; nullopt if any entry is unreachable.
inline std::optional<std::uint32_t> matrix_diameter(const DistanceMatrix& m) {
  std::uint32_t best = 0;
  for (const auto& row : m) {
    for (const auto& d : row) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

}  // namespace gridnet
