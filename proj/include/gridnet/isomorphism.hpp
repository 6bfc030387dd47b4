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
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gridnet/digraph.hpp"
#include "gridnet/distance.hpp"

namespace gridnet {

inline constexpr std::size_t kIsomorphismOrderCap = 128;

namespace detail {

// (out-degree, in-degree, forward eccentricity, forward reach, backward
// eccentricity, backward reach)
using VertexLabel = std::tuple<std::size_t, std::size_t, std::uint32_t,
                               std::size_t, std::uint32_t, std::size_t>;

inline Digraph reversed(const Digraph& g) {
  std::vector<std::vector<Vertex>> adj(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (const Vertex v : g.out(u)) adj[v].push_back(u);
  }
  return Digraph(adj);
}

inline std::vector<VertexLabel> vertex_labels(const Digraph& g,
                                              const Digraph& rev) {
  const auto in = g.in_degrees();
  std::vector<VertexLabel> labels;
  labels.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto fwd = bfs_profile(g, v);
    const auto bwd = bfs_profile(rev, v);
    const auto reach = [](const DistanceProfile& p) {
      return static_cast<std::size_t>(
          std::count_if(p.dist.begin(), p.dist.end(),
                        [](const Distance& d) { return d.has_value(); }));
    };
    labels.emplace_back(g.out_degree(v), in[v], fwd.eccentricity, reach(fwd),
                        bwd.eccentricity, reach(bwd));
  }
  return labels;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Digraph& g1, const Digraph& g2)
      : g1_(g1), g2_(g2), rev1_(reversed(g1)), rev2_(reversed(g2)),
        n_(g1.order()) {}

  bool run() {
    labels1_ = vertex_labels(g1_, rev1_);
    labels2_ = vertex_labels(g2_, rev2_);
    auto s1 = labels1_;
    auto s2 = labels2_;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;

    adj1_ = matrix(g1_);
    adj2_ = matrix(g2_);
    build_order();
    map_.assign(n_, kNone);
    used_.assign(n_, false);
    return extend(0);
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  std::vector<char> matrix(const Digraph& g) const {
    std::vector<char> m(n_ * n_, 0);
    for (Vertex u = 0; u < n_; ++u) {
      for (const Vertex v : g.out(u)) m[u * n_ + v] = 1;
    }
    return m;
  }

  // Visit g1 in undirected-BFS order so that every vertex after a component
  // root has an already-placed neighbour constraining its image.
  void build_order() {
    std::vector<std::size_t> freq_rank(n_);
    {
      auto sorted = labels1_;
      std::sort(sorted.begin(), sorted.end());
      for (Vertex v = 0; v < n_; ++v) {
        const auto [lo, hi] =
            std::equal_range(sorted.begin(), sorted.end(), labels1_[v]);
        freq_rank[v] = static_cast<std::size_t>(hi - lo);
      }
    }
    std::vector<bool> placed(n_, false);
    order_.clear();
    anchor_.clear();
    anchor_forward_.clear();
    while (order_.size() < n_) {
      Vertex root = kNone;
      for (Vertex v = 0; v < n_; ++v) {
        if (!placed[v] && (root == kNone || freq_rank[v] < freq_rank[root])) {
          root = v;
        }
      }
      placed[root] = true;
      order_.push_back(root);
      anchor_.push_back(kNone);
      anchor_forward_.push_back(true);
      for (std::size_t i = order_.size() - 1; i < order_.size(); ++i) {
        const Vertex u = order_[i];
        for (const Vertex v : g1_.out(u)) {
          if (placed[v]) continue;
          placed[v] = true;
          order_.push_back(v);
          anchor_.push_back(u);
          anchor_forward_.push_back(true);
        }
        for (const Vertex v : rev1_.out(u)) {
          if (placed[v]) continue;
          placed[v] = true;
          order_.push_back(v);
          anchor_.push_back(u);
          anchor_forward_.push_back(false);
        }
      }
    }
  }

  bool consistent(Vertex u, Vertex img, std::size_t depth) const {
    if (labels1_[u] != labels2_[img]) return false;
    if (adj1_[u * n_ + u] != adj2_[img * n_ + img]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex w = order_[i];
      const Vertex wi = map_[w];
      if (adj1_[u * n_ + w] != adj2_[img * n_ + wi]) return false;
      if (adj1_[w * n_ + u] != adj2_[wi * n_ + img]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex u = order_[depth];
    const auto try_image = [&](Vertex img) {
      if (used_[img] || !consistent(u, img, depth)) return false;
      map_[u] = img;
      used_[img] = true;
      if (extend(depth + 1)) return true;
      used_[img] = false;
      map_[u] = kNone;
      return false;
    };
    if (anchor_[depth] == kNone) {
      for (Vertex img = 0; img < n_; ++img) {
        if (try_image(img)) return true;
      }
      return false;
    }
    const Vertex anchor_img = map_[anchor_[depth]];
    const auto candidates =
        anchor_forward_[depth] ? g2_.out(anchor_img) : rev2_.out(anchor_img);
    for (const Vertex img : candidates) {
      if (try_image(img)) return true;
    }
    return false;
  }

  const Digraph& g1_;
  const Digraph& g2_;
  Digraph rev1_;
  Digraph rev2_;
  std::size_t n_;
  std::vector<VertexLabel> labels1_;
  std::vector<VertexLabel> labels2_;
  std::vector<char> adj1_;
  std::vector<char> adj2_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  std::vector<bool> anchor_forward_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace detail

/// True iff some vertex bijection maps the arcs of g1 exactly onto those of
/// g2. Backtracking over an undirected-BFS vertex order, pruned by degree
/// and eccentricity labels. Throws std::length_error above `cap` vertices.
inline bool are_isomorphic(const Digraph& g1, const Digraph& g2,
                           std::size_t cap = kIsomorphismOrderCap) {
  if (g1.order() > cap || g2.order() > cap) {
    throw std::length_error("are_isomorphic: order exceeds cap " +
                            std::to_string(cap));
  }
  if (g1.order() != g2.order() || g1.arc_count() != g2.arc_count()) {
    return false;
  }
  return detail::IsomorphismSearch(g1, g2).run();
}

}  // namespace gridnet
