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

#include <stdexcept>
#include <vector>

#include "gridnet/digraph.hpp"

namespace gridnet {

/// L(G): one vertex per arc of G, numbered by (tail, position in the tail's
/// out-list); arc u->v is joined to every arc v->w, in v's out-list order.
inline Digraph line_digraph(const Digraph& g) {
  if (g.arc_count() == 0) {
    throw std::invalid_argument("line_digraph: digraph has no arcs");
  }
  std::vector<std::vector<Vertex>> adj;
  adj.reserve(g.arc_count());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (const Vertex v : g.out(u)) {
      std::vector<Vertex> next;
      next.reserve(g.out_degree(v));
      for (std::size_t pos = 0; pos < g.out_degree(v); ++pos) {
        next.push_back(static_cast<Vertex>(g.arc_index(v, pos)));
      }
      adj.push_back(std::move(next));
    }
  }
  return Digraph(adj);
}

}  // namespace gridnet
